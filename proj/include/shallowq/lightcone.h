// Copyright 2026 The shallowq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHALLOWQ_LIGHTCONE_H
#define SHALLOWQ_LIGHTCONE_H

#include <optional>
#include <string>
#include <vector>

#include "shallowq/circuit.h"
#include "shallowq/constructions.h"
#include "shallowq/simulator.h"

namespace shallowq {

/// Backward cone of influence of one measured wire.
///
/// sets[0] is the support of the output-layer gate holding the measured wire
/// and sets[i] adds every gate of the (i+1)-th layer from the output that meets
/// sets[i-1]. A depth-0 circuit gets the single set {measured wire}.
struct LightconeReport {
    std::vector<std::vector<Wire>> sets;
    size_t max_arity;
    /// k^i for level i = 1..sets.size() (saturating).
    std::vector<double> bound_per_level;
    /// Data wires (index < n) outside the last set.
    std::vector<Wire> free_inputs;

    const std::vector<Wire> &deepest() const {
        return sets.back();
    }
};

LightconeReport lightcone(const Circuit &c, MeasurementSpec m);

/// Two basis inputs that differ on one free wire and that the circuit cannot
/// tell apart at the measured wire, while the reference operator can.
struct LightconePair {
    /// Basis input (bit w = wire w); ancillae are 0.
    uint64_t x;
    Wire flipped;
    TargetReading reading_x;
    TargetReading reading_flipped;
    TargetReading reference_x;
    TargetReading reference_flipped;
};

/// Returns a disproof that `c` computes `against` cleanly, or nullopt when the
/// lightcone covers every data wire (or, for non-parity operators, when the
/// reference readings do not differ). x is all zeros and the least free wire
/// is flipped.
std::optional<LightconePair> lightcone_counterexample(const Circuit &c, MeasurementSpec m, const ReferenceOp &against);

/// Re-simulates the pair from scratch: circuit readings equal within 1e-9 and
/// reference readings differing by at least 1 - 1e-9.
bool recheck_lightcone_pair(const Circuit &c, MeasurementSpec m, const ReferenceOp &against,
                            const LightconePair &pair);

struct DepthBoundVerdict {
    ReferenceKind against;
    size_t max_arity;
    /// Depth the cone argument is applied to; fanout adds the 2 Hadamard layers.
    size_t effective_depth;
    size_t n;
    /// max_arity^effective_depth < n.
    bool bound_triggered;
    LightconeReport report;
    std::optional<LightconePair> counterexample;
    /// True iff a counterexample was found and re-checked.
    bool refuted;
};

/// For parity, measures c.target directly. For fanout, analyses the Hadamard
/// conjugate of c against parity (a circuit computing fanout conjugates to one
/// computing parity).
DepthBoundVerdict check_depth_bound(const Circuit &c, ReferenceKind against);

}  // namespace shallowq

#endif
