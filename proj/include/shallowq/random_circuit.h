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

#ifndef SHALLOWQ_RANDOM_CIRCUIT_H
#define SHALLOWQ_RANDOM_CIRCUIT_H

#include <cstdint>
#include <random>

#include "shallowq/circuit.h"
#include "shallowq/state.h"

namespace shallowq {

/// Random 2x2 unitary (QR of a complex Gaussian matrix, phases fixed).
Matrix2 random_unitary(std::mt19937_64 &rng);

/// Campaign circuits for the adversary. In every layer each wire independently
/// gets a single-qubit gate with probability 1/2 (H, X, a phase gate or a random
/// unitary); the wires left over are split into Z-gates over random disjoint
/// sets of 1 to 4 wires. Target is wire n-1.
Circuit random_z_circuit(size_t n, size_t ancillae, size_t depth, uint64_t seed);

/// Random layers of gates with arity at most max_arity (1, 2 or 3+): single-qubit
/// gates, CNOT and two-wire Z, and for arity >= 3 Toffolis and Z-gates up to
/// that size. Every wire is used with probability 3/4. Target is wire n-1.
Circuit random_bounded_circuit(size_t n, size_t ancillae, size_t depth, size_t max_arity, uint64_t seed);

}  // namespace shallowq

#endif
