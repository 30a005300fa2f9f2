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

#ifndef SHALLOWQ_CIRCUIT_H
#define SHALLOWQ_CIRCUIT_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shallowq/gate.h"

namespace shallowq {

/// Raised when an internal consistency check fails. Never expected on valid
/// input; the CLI maps it to exit status 3.
struct InvariantBreach : std::logic_error {
    using std::logic_error::logic_error;
};

/// Gates with pairwise disjoint supports.
struct Layer {
    std::vector<Gate> gates;
    bool operator==(const Layer &) const = default;
};

/// A layered circuit.
///
/// Layers are stored in application order: layers[0] acts on the input first
/// and layers.back() is the output layer. Literature that writes a circuit as
/// the operator product L_1 L_2 ... L_d (L_1 = output layer) maps onto this
/// storage as L_i == layers[d - i]; see layer_from_output().
///
/// Wires 0..n-1 carry data (the inputs together with the target bit), wires
/// n..n+ancillae-1 are ancillae.
struct Circuit {
    size_t n = 0;
    size_t ancillae = 0;
    Wire target = 0;
    std::vector<Layer> layers;

    size_t depth() const {
        return layers.size();
    }
    size_t num_wires() const {
        return n + ancillae;
    }
    bool is_ancilla(Wire w) const {
        return w >= n && w < n + ancillae;
    }
    /// Layer k counted from the output (k = 1 is the output layer).
    const Layer &layer_from_output(size_t k) const {
        return layers[layers.size() - k];
    }
    /// Index into `layers` of layer_from_output(k).
    size_t layer_index_of(size_t k) const {
        return layers.size() - k;
    }

    bool operator==(const Circuit &) const = default;
};

/// Projector onto |1> of a single wire.
struct MeasurementSpec {
    Wire wire;
};

struct Violation {
    std::optional<size_t> layer;
    std::optional<size_t> gate;
    std::string message;
};

/// Every broken structural invariant of `c`; empty iff the circuit is valid.
std::vector<Violation> validate(const Circuit &c);
bool is_valid(const Circuit &c);
/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const Circuit &c);
std::string describe(const std::vector<Violation> &violations);

/// Largest gate arity in the circuit (1 when there are no gates).
size_t max_arity(const Circuit &c);
bool only_single_qubit_and_z(const Circuit &c);

/// Replaces every Toffoli/CNOT by H(t) . Z(controls + t) . H(t).
///
/// A layer containing permutation gates becomes three layers: Hadamards on the
/// targets, the layer itself with each Toffoli swapped for its Z-gate, then the
/// Hadamards again. Layers without Toffoli/CNOT are copied unchanged.
Circuit rewrite_toffoli_to_z(const Circuit &c);

}  // namespace shallowq

#endif
