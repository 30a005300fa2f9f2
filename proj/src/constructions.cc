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

#include "shallowq/constructions.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace shallowq {

namespace {

size_t block_capacity(size_t j, size_t depth) {
    return size_t{1} << std::min(j - 1, depth - j);
}

size_t ceil_log2(size_t s) {
    return s <= 1 ? 0 : std::bit_width(s - 1);
}

}  // namespace

std::string reference_kind_name(ReferenceKind kind) {
    return kind == ReferenceKind::parity ? "parity" : "fanout";
}

ReferenceKind parse_reference_kind(const std::string &name) {
    if (name == "parity") {
        return ReferenceKind::parity;
    }
    if (name == "fanout") {
        return ReferenceKind::fanout;
    }
    throw std::invalid_argument("unknown reference operator '" + name + "' (expected parity or fanout)");
}

ReferenceOp ReferenceOp::standard(ReferenceKind kind, size_t n) {
    return ReferenceOp{kind, wire_range(0, static_cast<Wire>(n)), static_cast<Wire>(n)};
}

ReferenceOp ReferenceOp::for_circuit(ReferenceKind kind, const Circuit &c) {
    if (c.target >= c.n) {
        throw std::invalid_argument("the target must be a data wire (index < n) to compare against " +
                                    reference_kind_name(kind));
    }
    ReferenceOp op{kind, {}, c.target};
    for (Wire w = 0; w < c.n; w++) {
        if (w != c.target) {
            op.inputs.push_back(w);
        }
    }
    return op;
}

uint64_t ReferenceOp::apply_to_bits(uint64_t bits) const {
    if (kind == ReferenceKind::parity) {
        uint64_t acc = 0;
        for (Wire w : inputs) {
            acc ^= (bits >> w) & 1;
        }
        return bits ^ (acc << target);
    }
    if ((bits >> target) & 1) {
        for (Wire w : inputs) {
            bits ^= uint64_t{1} << w;
        }
    }
    return bits;
}

PartialState apply_reference(const ReferenceOp &op, const PartialState &s) {
    auto check = [&](Wire w) {
        if (!s.contains(w)) {
            throw CoverageError(reference_kind_name(op.kind) + " operator touches wire " + std::to_string(w) +
                                " which is not covered by the state");
        }
    };
    check(op.target);
    for (Wire w : op.inputs) {
        check(w);
    }
    PartialState out{s.wires, std::vector<Complex>(s.amps.size(), Complex{0})};
    for (uint64_t k = 0; k < s.amps.size(); k++) {
        out.amps[s.local_index(op.apply_to_bits(s.global_bits(k)))] += s.amps[k];
    }
    return out;
}

DenseMatrix dense_reference(const ReferenceOp &op, size_t num_wires) {
    size_t dim = size_t{1} << num_wires;
    DenseMatrix m{dim, std::vector<Complex>(dim * dim, Complex{0})};
    for (uint64_t j = 0; j < dim; j++) {
        m.at(op.apply_to_bits(j), j) = 1;
    }
    return m;
}

size_t parity_logdepth_depth(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("parity needs at least one input");
    }
    size_t depth = 1;
    while (true) {
        size_t total = 0;
        for (size_t j = 1; j <= depth; j++) {
            total += block_capacity(j, depth);
        }
        if (total >= n) {
            return depth;
        }
        depth++;
    }
}

Circuit build_parity_logdepth(size_t n) {
    size_t depth = parity_logdepth_depth(n);
    if (n + 1 > 63) {
        throw std::invalid_argument("parity circuits are limited to 62 inputs");
    }
    Wire b = static_cast<Wire>(n);
    Circuit c{n + 1, 0, b, std::vector<Layer>(depth)};

    // Layers are addressed 1-based here to match the block schedule.
    auto at = [&](size_t layer) -> std::vector<Gate> & {
        return c.layers[layer - 1].gates;
    };

    Wire next = 0;
    for (size_t j = 1; j <= depth && next < n; j++) {
        size_t size = std::min(block_capacity(j, depth), n - next);
        Wire base = next;
        next += static_cast<Wire>(size);
        size_t levels = ceil_log2(size);
        for (size_t level = 1; level <= levels; level++) {
            size_t stride = size_t{1} << (level - 1);
            for (size_t i = 0; i + stride < size; i += 2 * stride) {
                Gate g = gate_cnot(base + static_cast<Wire>(i + stride), base + static_cast<Wire>(i));
                at(j - levels + level - 1).push_back(g);
                at(j + levels - level + 1).push_back(g);
            }
        }
        at(j).push_back(gate_cnot(base, b));
    }
    for (auto &layer : c.layers) {
        std::sort(layer.gates.begin(), layer.gates.end(), [](const Gate &x, const Gate &y) {
            return gate_support(x) < gate_support(y);
        });
    }
    return c;
}

Layer hadamard_layer(const std::vector<Wire> &wires) {
    Layer out;
    for (Wire w : wires) {
        out.gates.push_back(gate_h(w));
    }
    return out;
}

Circuit conjugate_parity_to_fanout(const Circuit &c) {
    Layer h = hadamard_layer(wire_range(0, static_cast<Wire>(c.n)));
    Circuit out{c.n, c.ancillae, c.target, {}};
    out.layers.reserve(c.layers.size() + 2);
    out.layers.push_back(h);
    out.layers.insert(out.layers.end(), c.layers.begin(), c.layers.end());
    out.layers.push_back(h);
    return out;
}

DepthBound tradeoff_bound(size_t n, size_t a, ReferenceKind kind) {
    if (n == 0) {
        throw std::invalid_argument("tradeoff_bound needs n >= 1");
    }
    double unbounded = 2.0 * std::log2(static_cast<double>(n) / static_cast<double>(a + 1));
    double bounded = std::log2(static_cast<double>(n));
    if (kind == ReferenceKind::fanout) {
        unbounded -= 2;
        bounded -= 2;
    }
    return DepthBound{std::max(0.0, unbounded), std::max(0.0, bounded)};
}

}  // namespace shallowq
