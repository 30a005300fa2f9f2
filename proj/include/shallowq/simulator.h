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

#ifndef SHALLOWQ_SIMULATOR_H
#define SHALLOWQ_SIMULATOR_H

#include <span>
#include <stdexcept>
#include <vector>

#include "shallowq/circuit.h"
#include "shallowq/state.h"

namespace shallowq {

/// Probabilities at or below this count as an exact 0 reading.
constexpr double EXACT_ZERO = 1e-9;

/// Raised when a gate touches a wire the state does not cover.
struct CoverageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ApplyOptions {
    /// Apply the gate's adjoint instead of the gate.
    bool adjoint = false;
    /// Wires known to hold |0>. A Z-gate touching any of them is the identity,
    /// so it may also reference wires missing from the state. Every other gate
    /// must be fully covered by the state.
    std::span<const Wire> fixed_zero = {};
};

struct TargetReading {
    double p1;
    bool exact_zero;
};

void apply_gate_in_place(const Gate &g, PartialState &s, const ApplyOptions &options = {});
PartialState apply_gate(const Gate &g, PartialState s, const ApplyOptions &options = {});

void apply_layer_in_place(const Layer &layer, PartialState &s, const ApplyOptions &options = {});
PartialState apply_layer(const Layer &layer, PartialState s, const ApplyOptions &options = {});

/// Applies layers [from, to) in application order, or with adjoint set, the
/// inverse of that slice (layers to-1 down to from, each gate adjointed).
PartialState run(const Circuit &c, PartialState input, size_t from, size_t to, bool adjoint = false);
/// The whole circuit.
PartialState run(const Circuit &c, PartialState input);

TargetReading read_target(const PartialState &s, MeasurementSpec m);

/// Square complex matrix, row major.
struct DenseMatrix {
    size_t dim = 0;
    std::vector<Complex> data;

    static DenseMatrix identity(size_t dim);
    Complex &at(size_t row, size_t col) {
        return data[row * dim + col];
    }
    Complex at(size_t row, size_t col) const {
        return data[row * dim + col];
    }
    DenseMatrix operator*(const DenseMatrix &other) const;
    DenseMatrix adjoint() const;
    double max_abs_diff(const DenseMatrix &other) const;
    /// Largest entry of |M^dagger M - I|.
    double unitarity_error() const;
};

constexpr size_t DENSE_OPERATOR_MAX_WIRES = 12;

/// Column j is the circuit applied to basis state j (bit w of j = wire w).
/// Limited to n + ancillae <= 12.
DenseMatrix dense_operator(const Circuit &c);

}  // namespace shallowq

#endif
