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

#ifndef SHALLOWQ_CONSTRUCTIONS_H
#define SHALLOWQ_CONSTRUCTIONS_H

#include <string>
#include <vector>

#include "shallowq/circuit.h"
#include "shallowq/simulator.h"
#include "shallowq/state.h"

namespace shallowq {

enum class ReferenceKind { parity, fanout };

std::string reference_kind_name(ReferenceKind kind);
/// Accepts "parity" and "fanout".
ReferenceKind parse_reference_kind(const std::string &name);

/// Parity or fanout over explicit wires.
///
///     parity: |x_1..x_n, b> -> |x_1..x_n, b ^ x_1 ^ ... ^ x_n>
///     fanout: |x_1..x_n, b> -> |x_1 ^ b, ..., x_n ^ b, b>
struct ReferenceOp {
    ReferenceKind kind;
    std::vector<Wire> inputs;
    Wire target;

    /// Inputs on wires 0..n-1 and the target on wire n.
    static ReferenceOp standard(ReferenceKind kind, size_t n);
    /// The operator a circuit is supposed to compute: the target is c.target,
    /// the inputs are the remaining data wires (ancillae are not involved).
    static ReferenceOp for_circuit(ReferenceKind kind, const Circuit &c);

    size_t arity() const {
        return inputs.size();
    }
    /// Action on a computational basis state (bit w = wire w).
    uint64_t apply_to_bits(uint64_t bits) const;
};

/// The operator extended linearly. Throws CoverageError if the state misses
/// one of the operator's wires.
PartialState apply_reference(const ReferenceOp &op, const PartialState &s);

/// Dense matrix of the operator on wires 0..num_wires-1.
DenseMatrix dense_reference(const ReferenceOp &op, size_t num_wires);

/// Depth of build_parity_logdepth(n): the least D with
/// sum_{j=1..D} 2^min(j-1, D-j) >= n, i.e. 3*2^m - 2 >= n for D = 2m+1 and
/// 2^(m+1) - 2 >= n for D = 2m.
size_t parity_logdepth_depth(size_t n);

/// CNOT-only circuit computing parity of n inputs exactly, with 0 ancillae.
///
/// Wires 0..n-1 are the inputs and wire n is the target. Layer j (1-based)
/// XORs into the target the root of a block of up to 2^min(j-1, D-j) inputs;
/// each block is folded into its root by a binary XOR tree in the layers just
/// before j and unfolded in the layers just after, so every input wire is
/// restored. Depth is parity_logdepth_depth(n), roughly 2 log2(n); this is
/// the optimum for n <= 4 (checked by exhaustive search).
Circuit build_parity_logdepth(size_t n);

/// One layer of Hadamards on `wires`.
Layer hadamard_layer(const std::vector<Wire> &wires);

/// Wraps c between two Hadamard layers over all data wires (depth + 2). If c
/// cleanly computes parity, the result cleanly computes fanout, and vice versa.
Circuit conjugate_parity_to_fanout(const Circuit &c);

/// Depth lower bounds implied for cleanly computing parity or fanout on n
/// inputs with a ancillae, floored at 0. Reals; compare against ceil().
struct DepthBound {
    /// Single-qubit plus unbounded Toffoli/Z gates: 2 log2(n / (a + 1)),
    /// minus 2 for fanout.
    double unbounded_toffoli;
    /// Gates of bounded arity, any ancillae: log2(n), minus 2 for fanout.
    double bounded_arity;
};
DepthBound tradeoff_bound(size_t n, size_t a, ReferenceKind kind);

}  // namespace shallowq

#endif
