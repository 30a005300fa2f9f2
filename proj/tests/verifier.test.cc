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

#include "shallowq/verifier.h"

#include <cmath>

#include "doctest.h"
#include "oracle.h"
#include "shallowq/lightcone.h"
#include "shallowq/random_circuit.h"

using namespace shallowq;

namespace {

Circuit identity_circuit(size_t n) {
    Circuit c{n, 0, static_cast<Wire>(n - 1), {Layer{}}};
    for (Wire w = 0; w < n; w++) {
        c.layers[0].gates.push_back(gate_identity(w));
    }
    return c;
}

}  // namespace

TEST_CASE("sparse engine matches the Kronecker oracle") {
    for (uint64_t seed = 0; seed < 30; seed++) {
        Circuit c = seed % 2 ? random_z_circuit(3, 1, 3, seed) : random_bounded_circuit(4, 0, 3, 3, seed);
        auto m = oracle::circuit_matrix(c);
        for (uint64_t x = 0; x < m.dim; x++) {
            SparseState out = sparse_run(c, x);
            double worst = 0;
            for (uint64_t y = 0; y < m.dim; y++) {
                Complex got = out.contains(y) ? out.at(y) : Complex{0};
                worst = std::max(worst, std::abs(got - m(y, x)));
            }
            CHECK(worst < 1e-12);
        }
    }
}

TEST_CASE("parity construction verifies") {
    Circuit c = build_parity_logdepth(4);
    auto r = verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c));
    CHECK(r.ok);
    CHECK(r.inputs_checked == 32);
    CHECK(r.max_deviation <= 1e-9);
    CHECK_FALSE(r.first_failure.has_value());
}

TEST_CASE("identity is not parity") {
    Circuit c = identity_circuit(4);
    auto r = verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c));
    CHECK_FALSE(r.ok);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->input == 0b0001);
    CHECK(r.first_failure->expected == 0b1001);
    CHECK(r.inputs_checked == 2);
    CHECK(describe(r, c).find("first failure: input |1000>") != std::string::npos);
}

TEST_CASE("fanout via conjugated parity verifies") {
    Circuit c = conjugate_parity_to_fanout(build_parity_logdepth(2));
    CHECK(verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::fanout, c)).ok);
    CHECK_FALSE(verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c)).ok);
}

TEST_CASE("phase handling") {
    // Global phase -1 on every input: fine up to phase, wrong literally.
    Circuit c = build_parity_logdepth(1);
    c.layers.push_back(Layer{{gate_u(0, Matrix2{-1, 0, 0, -1})}});
    auto op = ReferenceOp::for_circuit(ReferenceKind::parity, c);
    CHECK(verify_clean(c, op).ok);
    VerifyOptions strict;
    strict.strict_phase = true;
    CHECK_FALSE(verify_clean(c, op, strict).ok);
}

TEST_CASE("dirty ancilla fails clean verification") {
    Circuit c = build_parity_logdepth(2);
    c.ancillae = 1;
    c.layers.push_back(Layer{{gate_x(3)}});
    CHECK_FALSE(verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c)).ok);
}

TEST_CASE("exhaustive mode keeps going") {
    Circuit c = identity_circuit(3);
    VerifyOptions all;
    all.exhaustive = true;
    auto r = verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c), all);
    CHECK(r.inputs_checked == 8);
    CHECK(r.max_deviation == doctest::Approx(1));
}

TEST_CASE("size guard") {
    Circuit c{10, 8, 0, {}};
    CHECK_THROWS_AS(verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c)), std::invalid_argument);
    CHECK_THROWS_AS(sensitivity_scan(Circuit{11, 0, 0, {}}, {0}), std::invalid_argument);
}

TEST_CASE("sensitivity of the parity construction") {
    Circuit c = build_parity_logdepth(4);
    CHECK(sensitivity_scan(c, {c.target}) == std::vector<Wire>{0, 1, 2, 3, 4});
}

TEST_CASE("sensitivity of a two-wire circuit") {
    Circuit c{5, 0, 1, {Layer{{gate_cnot(0, 1)}}, Layer{{gate_h(0)}}}};
    CHECK(wire_subset(sensitivity_scan(c, {1}), std::vector<Wire>{0, 1}));
}

TEST_CASE("truncated parity tree sensitivity inside the cone") {
    Circuit small = build_parity_logdepth(6);
    small.layers.resize(3);
    CHECK(wire_subset(sensitivity_scan(small, {small.target}), lightcone(small, {small.target}).deepest()));
}

TEST_CASE("property: sensitivity stays inside the lightcone") {
    size_t violations = 0;
    for (uint64_t seed = 0; seed < 200; seed++) {
        size_t n = 2 + seed % 5;
        size_t a = seed % 3;
        Circuit c = random_bounded_circuit(n, a, 1 + seed % 4, 2 + seed % 2, seed);
        if (!wire_subset(sensitivity_scan(c, {c.target}), lightcone(c, {c.target}).deepest())) {
            violations++;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("property: a verified circuit is never accused") {
    for (size_t n : {1, 2, 3, 4, 5}) {
        Circuit c = build_parity_logdepth(n);
        auto op = ReferenceOp::for_circuit(ReferenceKind::parity, c);
        REQUIRE(verify_clean(c, op).ok);
        CHECK_FALSE(lightcone_counterexample(c, {c.target}, op).has_value());
    }
}
