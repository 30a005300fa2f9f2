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

#include "shallowq/gate.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shallowq {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_wires(const std::vector<Wire> &wires) {
    std::stringstream ss;
    for (size_t k = 0; k < wires.size(); k++) {
        if (k) {
            ss << ',';
        }
        ss << wires[k];
    }
    return ss.str();
}

}  // namespace

Matrix2 matrix_identity() {
    return {Complex{1}, Complex{0}, Complex{0}, Complex{1}};
}

Matrix2 matrix_h() {
    double s = 1.0 / std::sqrt(2.0);
    return {Complex{s}, Complex{s}, Complex{s}, Complex{-s}};
}

Matrix2 matrix_x() {
    return {Complex{0}, Complex{1}, Complex{1}, Complex{0}};
}

Matrix2 matrix_phase(double theta) {
    return {Complex{1}, Complex{0}, Complex{0}, std::polar(1.0, theta)};
}

Matrix2 matrix_adjoint(const Matrix2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Matrix2 matrix_product(const Matrix2 &a, const Matrix2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

double unitarity_error(const Matrix2 &m) {
    Matrix2 p = matrix_product(matrix_adjoint(m), m);
    Matrix2 id = matrix_identity();
    double worst = 0;
    for (size_t k = 0; k < 4; k++) {
        worst = std::max(worst, std::abs(p[k] - id[k]));
    }
    return worst;
}

bool is_unitary(const Matrix2 &m, double tolerance) {
    return unitarity_error(m) <= tolerance;
}

Gate gate_u(Wire wire, const Matrix2 &u) {
    return SingleQubitGate{wire, u};
}

Gate gate_h(Wire wire) {
    return SingleQubitGate{wire, matrix_h()};
}

Gate gate_x(Wire wire) {
    return SingleQubitGate{wire, matrix_x()};
}

Gate gate_phase(Wire wire, double theta) {
    return SingleQubitGate{wire, matrix_phase(theta)};
}

Gate gate_identity(Wire wire) {
    return SingleQubitGate{wire, matrix_identity()};
}

Gate gate_z(std::vector<Wire> wires) {
    std::sort(wires.begin(), wires.end());
    return ZGate{std::move(wires)};
}

Gate gate_toffoli(std::vector<Wire> controls, Wire target) {
    std::sort(controls.begin(), controls.end());
    return ToffoliGate{std::move(controls), target};
}

Gate gate_cnot(Wire control, Wire target) {
    return CnotGate{control, target};
}

std::vector<Wire> gate_support(const Gate &g) {
    std::vector<Wire> out = std::visit(
        Overloaded{
            [](const SingleQubitGate &s) {
                return std::vector<Wire>{s.wire};
            },
            [](const ZGate &z) {
                return z.wires;
            },
            [](const ToffoliGate &t) {
                std::vector<Wire> w = t.controls;
                w.push_back(t.target);
                return w;
            },
            [](const CnotGate &c) {
                return std::vector<Wire>{c.control, c.target};
            },
        },
        g);
    std::sort(out.begin(), out.end());
    return out;
}

size_t gate_arity(const Gate &g) {
    return gate_support(g).size();
}

bool gate_touches(const Gate &g, Wire w) {
    auto s = gate_support(g);
    return std::binary_search(s.begin(), s.end(), w);
}

Gate gate_adjoint(const Gate &g) {
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
        return SingleQubitGate{s->wire, matrix_adjoint(s->u)};
    }
    // Z, Toffoli and CNOT are self-inverse.
    return g;
}

std::string gate_str(const Gate &g) {
    return std::visit(
        Overloaded{
            [](const SingleQubitGate &s) {
                std::stringstream ss;
                if (s.u == matrix_h()) {
                    ss << "H(" << s.wire << ")";
                } else if (s.u == matrix_x()) {
                    ss << "X(" << s.wire << ")";
                } else if (s.u == matrix_identity()) {
                    ss << "I(" << s.wire << ")";
                } else {
                    ss << "U(" << s.wire << ")";
                }
                return ss.str();
            },
            [](const ZGate &z) {
                return "Z(" + join_wires(z.wires) + ")";
            },
            [](const ToffoliGate &t) {
                return "TOFFOLI(" + join_wires(t.controls) + "->" + std::to_string(t.target) + ")";
            },
            [](const CnotGate &c) {
                return "CNOT(" + std::to_string(c.control) + "->" + std::to_string(c.target) + ")";
            },
        },
        g);
}

}  // namespace shallowq
