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
#include <random>

#include "doctest.h"
#include "oracle.h"
#include "shallowq/constructions.h"
#include "shallowq/random_circuit.h"

using namespace shallowq;

namespace {

std::vector<Wire> wires_of(const Circuit &c) {
    return wire_range(0, static_cast<Wire>(c.num_wires()));
}

}  // namespace

TEST_CASE("Z on two wires") {
    auto s = apply_gate(gate_z({0, 1}), PartialState::basis({0, 1}, 0b11));
    CHECK(s.amps[3] == Complex{-1});
    s = apply_gate(gate_z({0, 1}), PartialState::basis({0, 1}, 0b10));
    CHECK(s.amps[2] == Complex{1});
}

TEST_CASE("Toffoli flips the target") {
    auto s = apply_gate(gate_toffoli({0, 1}, 2), PartialState::basis({0, 1, 2}, 0b011));
    CHECK(s.amps[0b111] == Complex{1});
}

TEST_CASE("H undoes plus") {
    double r = 1 / std::sqrt(2.0);
    auto s = apply_gate(gate_h(0), PartialState::single(0, r, r));
    CHECK(std::abs(s.amps[0] - 1.0) < 1e-15);
    CHECK(std::abs(s.amps[1]) < 1e-15);
}

TEST_CASE("layer examples") {
    auto s = apply_layer(Layer{{gate_h(0), gate_h(1)}}, PartialState::zeros({0, 1}));
    for (auto a : s.amps) {
        CHECK(std::abs(a - 0.5) < 1e-15);
    }
    auto z = PartialState::basis({0, 1, 2}, 0b101);
    CHECK(apply_layer(Layer{}, z) == z);
    auto t = apply_layer(Layer{{gate_z({0, 1}), gate_x(2)}}, PartialState::basis({0, 1, 2}, 0b011));
    CHECK(t.amps[0b111] == Complex{-1});
}

TEST_CASE("coverage and the fixed-to-0 exception") {
    auto s = PartialState::zeros({0, 1});
    CHECK_THROWS_AS(apply_gate(gate_z({1, 2}), s), CoverageError);
    CHECK_THROWS_AS(apply_gate(gate_h(2), s), CoverageError);
    Wire fixed[]{1};
    ApplyOptions options;
    options.fixed_zero = fixed;
    CHECK(apply_gate(gate_z({1, 2}), s, options) == s);
    // The exception covers Z-gates only.
    CHECK_THROWS_AS(apply_gate(gate_cnot(1, 2), s, options), CoverageError);
}

TEST_CASE("run slices") {
    Circuit c = random_z_circuit(3, 0, 4, 5);
    auto in = PartialState::basis(wires_of(c), 0b101);
    CHECK(run(c, in, 2, 2) == in);
    auto full = run(c, in);
    auto split = run(c, run(c, in, 0, 2), 2, 4);
    CHECK(max_amplitude_diff(full, split) < 1e-12);
}

TEST_CASE("parity construction on 1011") {
    Circuit c = build_parity_logdepth(4);
    uint64_t x = 0b1101;  // wires 0..3 hold 1,0,1,1
    auto out = run(c, PartialState::basis(wires_of(c), x));
    auto reference = apply_reference(ReferenceOp::for_circuit(ReferenceKind::parity, c),
                                     PartialState::basis(wires_of(c), x));
    CHECK(std::abs(out.amps[x | (uint64_t{1} << 4)] - 1.0) < 1e-12);
    CHECK(max_amplitude_diff(out, reference) < 1e-12);
}

TEST_CASE("read_target") {
    CHECK(read_target(PartialState::zeros({0}), {0}).p1 == 0);
    CHECK(read_target(PartialState::zeros({0}), {0}).exact_zero);
    auto plus = apply_gate(gate_h(0), PartialState::zeros({0}));
    CHECK(std::abs(read_target(plus, {0}).p1 - 0.5) < 1e-12);
    CHECK_FALSE(read_target(plus, {0}).exact_zero);
    CHECK_THROWS_AS(read_target(plus, {1}), std::invalid_argument);
}

TEST_CASE("dense operator examples") {
    Circuit id{2, 0, 0, {Layer{{gate_identity(0), gate_identity(1)}}}};
    CHECK(dense_operator(id).max_abs_diff(DenseMatrix::identity(4)) == 0);

    Circuit cx{2, 0, 1, {Layer{{gate_cnot(0, 1)}}}};
    DenseMatrix m = dense_operator(cx);
    // |x0 x1> with bit 0 = wire 0: 01 -> 11, 11 -> 01.
    CHECK(m.at(0, 0) == Complex{1});
    CHECK(m.at(3, 1) == Complex{1});
    CHECK(m.at(1, 3) == Complex{1});
    CHECK(m.at(2, 2) == Complex{1});

    Circuit t{3, 0, 2, {Layer{{gate_toffoli({0, 1}, 2)}}}};
    CHECK(dense_operator(rewrite_toffoli_to_z(t)).max_abs_diff(dense_operator(t)) < 1e-12);

    Circuit big{13, 0, 0, {}};
    CHECK_THROWS_AS(dense_operator(big), std::invalid_argument);
}

TEST_CASE("dense operator agrees with the Kronecker oracle") {
    for (uint64_t seed = 0; seed < 40; seed++) {
        Circuit c = seed % 2 ? random_z_circuit(3, 1, 3, seed) : random_bounded_circuit(4, 0, 3, 3, seed);
        DenseMatrix m = dense_operator(c);
        oracle::Mat o = oracle::circuit_matrix(c);
        double worst = 0;
        for (size_t k = 0; k < m.data.size(); k++) {
            worst = std::max(worst, std::abs(m.data[k] - o.e[k]));
        }
        CHECK(worst < 1e-12);
        CHECK(m.unitarity_error() < 1e-9);
    }
}

TEST_CASE("property: norm preservation and adjoint inversion") {
    std::mt19937_64 rng(99);
    for (uint64_t seed = 0; seed < 100; seed++) {
        size_t n = 2 + seed % 5;
        size_t a = seed % 3;
        Circuit c = seed % 2 ? random_z_circuit(n, a, 1 + seed % 5, seed) : random_bounded_circuit(n, a, 1 + seed % 5, 3, seed);
        auto in = PartialState::random(wires_of(c), rng);
        auto out = run(c, in);
        CHECK(std::abs(out.norm() - in.norm()) < 1e-10);
        auto back = run(c, out, 0, c.depth(), true);
        CHECK(max_amplitude_diff(back, in) < 1e-10);
    }
}

TEST_CASE("property: gate order inside a layer does not matter") {
    std::mt19937_64 rng(5);
    for (uint64_t seed = 0; seed < 50; seed++) {
        Circuit c = random_bounded_circuit(6, 1, 1, 3, seed);
        Layer shuffled = c.layers[0];
        std::shuffle(shuffled.gates.begin(), shuffled.gates.end(), rng);
        auto in = PartialState::random(wires_of(c), rng);
        CHECK(max_amplitude_diff(apply_layer(c.layers[0], in), apply_layer(shuffled, in)) <= 1e-12);
    }
}

TEST_CASE("property: Z-gates map basis states to signed basis states") {
    for (uint64_t seed = 0; seed < 30; seed++) {
        std::mt19937_64 rng(seed);
        std::vector<Wire> wires{0, 1, 2, 3};
        std::shuffle(wires.begin(), wires.end(), rng);
        wires.resize(1 + seed % 4);
        for (uint64_t x = 0; x < 16; x++) {
            auto s = apply_gate(gate_z(wires), PartialState::basis({0, 1, 2, 3}, x));
            CHECK(std::abs(std::abs(s.amps[x]) - 1) < 1e-15);
        }
    }
}
