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

#ifndef SHALLOWQ_GATE_H
#define SHALLOWQ_GATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace shallowq {

using Wire = uint32_t;
using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

constexpr double UNITARY_TOLERANCE = 1e-10;

Matrix2 matrix_identity();
Matrix2 matrix_h();
Matrix2 matrix_x();
/// diag(1, e^{i theta}).
Matrix2 matrix_phase(double theta);
Matrix2 matrix_adjoint(const Matrix2 &m);
Matrix2 matrix_product(const Matrix2 &a, const Matrix2 &b);
/// Largest entry of |U^dagger U - I|.
double unitarity_error(const Matrix2 &m);
bool is_unitary(const Matrix2 &m, double tolerance = UNITARY_TOLERANCE);

struct SingleQubitGate {
    Wire wire;
    Matrix2 u;
    bool operator==(const SingleQubitGate &) const = default;
};

/// Flips the sign of the amplitudes that are 1 on every one of `wires`.
struct ZGate {
    std::vector<Wire> wires;
    bool operator==(const ZGate &) const = default;
};

/// Target is XORed with the AND of the controls.
struct ToffoliGate {
    std::vector<Wire> controls;
    Wire target;
    bool operator==(const ToffoliGate &) const = default;
};

struct CnotGate {
    Wire control;
    Wire target;
    bool operator==(const CnotGate &) const = default;
};

using Gate = std::variant<SingleQubitGate, ZGate, ToffoliGate, CnotGate>;

// Constructors. Wire lists are stored sorted ascending; duplicates are kept so
// that validate() can report them.
Gate gate_u(Wire wire, const Matrix2 &u);
Gate gate_h(Wire wire);
Gate gate_x(Wire wire);
Gate gate_phase(Wire wire, double theta);
Gate gate_identity(Wire wire);
Gate gate_z(std::vector<Wire> wires);
Gate gate_toffoli(std::vector<Wire> controls, Wire target);
Gate gate_cnot(Wire control, Wire target);

/// Sorted list of every wire the gate touches.
std::vector<Wire> gate_support(const Gate &g);
size_t gate_arity(const Gate &g);
bool gate_touches(const Gate &g, Wire w);
Gate gate_adjoint(const Gate &g);

inline bool is_single_qubit(const Gate &g) {
    return std::holds_alternative<SingleQubitGate>(g);
}
inline bool is_z_gate(const Gate &g) {
    return std::holds_alternative<ZGate>(g);
}
/// Toffoli or CNOT.
inline bool is_permutation_gate(const Gate &g) {
    return std::holds_alternative<ToffoliGate>(g) || std::holds_alternative<CnotGate>(g);
}

/// Short human readable description, e.g. "Z(0,3)" or "CNOT(1->2)".
std::string gate_str(const Gate &g);

}  // namespace shallowq

#endif
