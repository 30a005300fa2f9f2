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

#ifndef SHALLOWQ_STATE_H
#define SHALLOWQ_STATE_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "shallowq/gate.h"

namespace shallowq {

constexpr double NORM_TOLERANCE = 1e-10;
/// Dense states above this many wires are refused.
constexpr size_t MAX_STATE_WIRES = 30;

/// A state over a subset of the circuit's wires.
///
/// `wires` is sorted ascending and duplicate free. Bit q of an amplitude index
/// is the value of wires[q], so amps.size() == 2^wires.size().
struct PartialState {
    std::vector<Wire> wires;
    std::vector<Complex> amps;

    /// |0...0> over `wires` (sorted here).
    static PartialState zeros(std::vector<Wire> wires);
    /// Computational basis state; bit w of `global_bits` gives the value of wire w.
    static PartialState basis(std::vector<Wire> wires, uint64_t global_bits);
    /// a0|0> + a1|1> on one wire.
    static PartialState single(Wire w, Complex a0, Complex a1);
    /// Haar-like random unit vector (normalized complex Gaussian entries).
    static PartialState random(std::vector<Wire> wires, std::mt19937_64 &rng);

    size_t num_wires() const {
        return wires.size();
    }
    std::optional<size_t> position_of(Wire w) const;
    bool contains(Wire w) const {
        return position_of(w).has_value();
    }
    /// Local amplitude index of the basis state given by `global_bits`.
    uint64_t local_index(uint64_t global_bits) const;
    /// Inverse of local_index (bits of wires outside the state are 0).
    uint64_t global_bits(uint64_t local_index) const;

    double norm() const;
    /// Probability that wire `w` reads 1.
    double probability_one(Wire w) const;

    bool operator==(const PartialState &) const = default;
};

/// Tensor product of states over disjoint wire sets.
PartialState tensor(const PartialState &a, const PartialState &b);

/// Largest |a_i - b_i|; the states must be over the same wires.
double max_amplitude_diff(const PartialState &a, const PartialState &b);

/// Sorted union / difference helpers for wire sets.
std::vector<Wire> wire_union(std::span<const Wire> a, std::span<const Wire> b);
std::vector<Wire> wire_difference(std::span<const Wire> a, std::span<const Wire> b);
bool wire_subset(std::span<const Wire> a, std::span<const Wire> b);
std::vector<Wire> wire_range(Wire begin, Wire end);

}  // namespace shallowq

#endif
