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

#include "shallowq/simulator.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace shallowq {

namespace {

uint64_t require_bit(const PartialState &s, Wire w, const Gate &g) {
    auto q = s.position_of(w);
    if (!q) {
        throw CoverageError("gate " + gate_str(g) + " touches wire " + std::to_string(w) +
                            " which is not covered by the state");
    }
    return uint64_t{1} << *q;
}

void apply_single(const SingleQubitGate &g, const Gate &whole, PartialState &s, bool adjoint) {
    uint64_t bit = require_bit(s, g.wire, whole);
    Matrix2 u = adjoint ? matrix_adjoint(g.u) : g.u;
    for (uint64_t k = 0; k < s.amps.size(); k++) {
        if (k & bit) {
            continue;
        }
        Complex a0 = s.amps[k];
        Complex a1 = s.amps[k | bit];
        s.amps[k] = u[0] * a0 + u[1] * a1;
        s.amps[k | bit] = u[2] * a0 + u[3] * a1;
    }
}

void apply_z(const ZGate &g, const Gate &whole, PartialState &s, std::span<const Wire> fixed_zero) {
    for (Wire w : g.wires) {
        if (std::find(fixed_zero.begin(), fixed_zero.end(), w) != fixed_zero.end()) {
            return;
        }
    }
    uint64_t mask = 0;
    for (Wire w : g.wires) {
        mask |= require_bit(s, w, whole);
    }
    for (uint64_t k = 0; k < s.amps.size(); k++) {
        if ((k & mask) == mask) {
            s.amps[k] = -s.amps[k];
        }
    }
}

void apply_controlled_not(uint64_t controls, uint64_t target, PartialState &s) {
    for (uint64_t k = 0; k < s.amps.size(); k++) {
        if ((k & controls) == controls && !(k & target)) {
            std::swap(s.amps[k], s.amps[k | target]);
        }
    }
}

}  // namespace

void apply_gate_in_place(const Gate &g, PartialState &s, const ApplyOptions &options) {
    if (const auto *u = std::get_if<SingleQubitGate>(&g)) {
        apply_single(*u, g, s, options.adjoint);
    } else if (const auto *z = std::get_if<ZGate>(&g)) {
        apply_z(*z, g, s, options.fixed_zero);
    } else if (const auto *t = std::get_if<ToffoliGate>(&g)) {
        uint64_t controls = 0;
        for (Wire w : t->controls) {
            controls |= require_bit(s, w, g);
        }
        apply_controlled_not(controls, require_bit(s, t->target, g), s);
    } else {
        const auto &c = std::get<CnotGate>(g);
        apply_controlled_not(require_bit(s, c.control, g), require_bit(s, c.target, g), s);
    }
}

PartialState apply_gate(const Gate &g, PartialState s, const ApplyOptions &options) {
    apply_gate_in_place(g, s, options);
    return s;
}

void apply_layer_in_place(const Layer &layer, PartialState &s, const ApplyOptions &options) {
    for (const auto &g : layer.gates) {
        apply_gate_in_place(g, s, options);
    }
}

PartialState apply_layer(const Layer &layer, PartialState s, const ApplyOptions &options) {
    apply_layer_in_place(layer, s, options);
    return s;
}

PartialState run(const Circuit &c, PartialState input, size_t from, size_t to, bool adjoint) {
    if (from > to || to > c.depth()) {
        throw std::out_of_range("layer slice [" + std::to_string(from) + ", " + std::to_string(to) +
                                ") outside a circuit of depth " + std::to_string(c.depth()));
    }
    ApplyOptions options;
    options.adjoint = adjoint;
    if (adjoint) {
        for (size_t k = to; k > from; k--) {
            apply_layer_in_place(c.layers[k - 1], input, options);
        }
    } else {
        for (size_t k = from; k < to; k++) {
            apply_layer_in_place(c.layers[k], input, options);
        }
    }
    return input;
}

PartialState run(const Circuit &c, PartialState input) {
    return run(c, std::move(input), 0, c.depth(), false);
}

TargetReading read_target(const PartialState &s, MeasurementSpec m) {
    double p1 = s.probability_one(m.wire);
    return TargetReading{p1, p1 <= EXACT_ZERO};
}

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix m{dim, std::vector<Complex>(dim * dim, Complex{0})};
    for (size_t k = 0; k < dim; k++) {
        m.at(k, k) = 1;
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &other) const {
    if (dim != other.dim) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    DenseMatrix out{dim, std::vector<Complex>(dim * dim, Complex{0})};
    for (size_t i = 0; i < dim; i++) {
        for (size_t k = 0; k < dim; k++) {
            Complex a = at(i, k);
            if (a == Complex{0}) {
                continue;
            }
            for (size_t j = 0; j < dim; j++) {
                out.at(i, j) += a * other.at(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out{dim, std::vector<Complex>(dim * dim)};
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            out.at(j, i) = std::conj(at(i, j));
        }
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix &other) const {
    if (dim != other.dim) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < data.size(); k++) {
        worst = std::max(worst, std::abs(data[k] - other.data[k]));
    }
    return worst;
}

double DenseMatrix::unitarity_error() const {
    return (adjoint() * *this).max_abs_diff(identity(dim));
}

DenseMatrix dense_operator(const Circuit &c) {
    if (c.num_wires() > DENSE_OPERATOR_MAX_WIRES) {
        throw std::invalid_argument("dense_operator is limited to " + std::to_string(DENSE_OPERATOR_MAX_WIRES) +
                                    " wires, circuit has " + std::to_string(c.num_wires()));
    }
    auto wires = wire_range(0, static_cast<Wire>(c.num_wires()));
    size_t dim = size_t{1} << wires.size();
    DenseMatrix m{dim, std::vector<Complex>(dim * dim)};
    for (size_t j = 0; j < dim; j++) {
        PartialState out = run(c, PartialState::basis(wires, j));
        for (size_t i = 0; i < dim; i++) {
            m.at(i, j) = out.amps[i];
        }
    }
    return m;
}

}  // namespace shallowq
