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

#include "shallowq/random_circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shallowq {

namespace {

Circuit empty_circuit(size_t n, size_t ancillae) {
    if (n == 0) {
        throw std::invalid_argument("random circuits need at least one data wire");
    }
    Circuit c;
    c.n = n;
    c.ancillae = ancillae;
    c.target = static_cast<Wire>(n - 1);
    return c;
}

Gate random_single(Wire w, std::mt19937_64 &rng) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0:
            return gate_h(w);
        case 1:
            return gate_x(w);
        case 2:
            return gate_phase(w, std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng));
        default:
            return gate_u(w, random_unitary(rng));
    }
}

std::vector<Wire> shuffled_wires(size_t count, std::mt19937_64 &rng) {
    auto wires = wire_range(0, static_cast<Wire>(count));
    std::shuffle(wires.begin(), wires.end(), rng);
    return wires;
}

void sort_layer(Layer &layer) {
    std::sort(layer.gates.begin(), layer.gates.end(), [](const Gate &a, const Gate &b) {
        return gate_support(a) < gate_support(b);
    });
}

}  // namespace

Matrix2 random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Complex a{normal(rng), normal(rng)};
    Complex b{normal(rng), normal(rng)};
    double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    Complex phase = std::polar(1.0, std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng));
    // Columns (a, b) and phase * (-conj b, conj a) are orthonormal.
    return Matrix2{a, -phase * std::conj(b), b, phase * std::conj(a)};
}

Circuit random_z_circuit(size_t n, size_t ancillae, size_t depth, uint64_t seed) {
    Circuit c = empty_circuit(n, ancillae);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<size_t> z_size(1, 4);
    for (size_t d = 0; d < depth; d++) {
        Layer layer;
        std::vector<Wire> rest;
        for (Wire w : wire_range(0, static_cast<Wire>(c.num_wires()))) {
            if (coin(rng)) {
                layer.gates.push_back(random_single(w, rng));
            } else {
                rest.push_back(w);
            }
        }
        std::shuffle(rest.begin(), rest.end(), rng);
        for (size_t i = 0; i < rest.size();) {
            size_t size = std::min(z_size(rng), rest.size() - i);
            layer.gates.push_back(gate_z({rest.begin() + i, rest.begin() + i + size}));
            i += size;
        }
        sort_layer(layer);
        c.layers.push_back(std::move(layer));
    }
    return c;
}

Circuit random_bounded_circuit(size_t n, size_t ancillae, size_t depth, size_t max_arity, uint64_t seed) {
    if (max_arity == 0) {
        throw std::invalid_argument("max_arity must be at least 1");
    }
    Circuit c = empty_circuit(n, ancillae);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution use(0.75);
    std::uniform_int_distribution<size_t> arity(1, max_arity);
    for (size_t d = 0; d < depth; d++) {
        Layer layer;
        auto wires = shuffled_wires(c.num_wires(), rng);
        for (size_t i = 0; i < wires.size();) {
            size_t size = std::min(arity(rng), wires.size() - i);
            std::vector<Wire> group(wires.begin() + i, wires.begin() + i + size);
            i += size;
            if (!use(rng)) {
                continue;
            }
            if (size == 1) {
                layer.gates.push_back(random_single(group[0], rng));
            } else if (std::bernoulli_distribution(0.5)(rng)) {
                layer.gates.push_back(gate_z(group));
            } else if (size == 2) {
                layer.gates.push_back(gate_cnot(group[0], group[1]));
            } else {
                Wire target = group.back();
                group.pop_back();
                layer.gates.push_back(gate_toffoli(group, target));
            }
        }
        sort_layer(layer);
        c.layers.push_back(std::move(layer));
    }
    return c;
}

}  // namespace shallowq
