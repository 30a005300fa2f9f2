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

#include "shallowq/lightcone.h"

#include <cmath>

#include "doctest.h"
#include "shallowq/random_circuit.h"
#include "shallowq/verifier.h"

using namespace shallowq;

namespace {

Circuit truncated(const Circuit &c, size_t layers) {
    Circuit out = c;
    out.layers.resize(layers);
    return out;
}

}  // namespace

TEST_CASE("hand-propagated cone") {
    Circuit c{5, 0, 0, {Layer{{gate_cnot(0, 2), gate_cnot(1, 3)}}, Layer{{gate_cnot(0, 1)}}}};
    auto r = lightcone(c, {0});
    REQUIRE(r.sets.size() == 2);
    CHECK(r.sets[0] == std::vector<Wire>{0, 1});
    CHECK(r.sets[1] == std::vector<Wire>{0, 1, 2, 3});
    CHECK(r.free_inputs == std::vector<Wire>{4});
    CHECK(r.max_arity == 2);
    CHECK(r.bound_per_level == std::vector<double>{2, 4});
    // Brute-force sensitivity agrees.
    CHECK(wire_subset(sensitivity_scan(c, {0}), r.deepest()));
}

TEST_CASE("depth-0 cone") {
    Circuit c{4, 0, 2, {}};
    auto r = lightcone(c, {2});
    CHECK(r.sets == std::vector<std::vector<Wire>>{{2}});
    CHECK(r.free_inputs == std::vector<Wire>{0, 1, 3});
}

TEST_CASE("single-qubit circuits keep the cone at the measured wire") {
    Circuit c{3, 0, 1, {Layer{{gate_h(0), gate_h(1), gate_x(2)}}, Layer{{gate_phase(1, 0.2)}}, Layer{{gate_h(1)}}}};
    for (const auto &s : lightcone(c, {1}).sets) {
        CHECK(s == std::vector<Wire>{1});
    }
}

TEST_CASE("truncated parity tree yields a counterexample") {
    Circuit c = truncated(build_parity_logdepth(8), 2);
    auto op = ReferenceOp::for_circuit(ReferenceKind::parity, c);
    auto pair = lightcone_counterexample(c, {c.target}, op);
    REQUIRE(pair.has_value());
    CHECK(pair->x == 0);
    CHECK(std::abs(pair->reading_x.p1 - pair->reading_flipped.p1) <= 1e-9);
    CHECK(std::abs(pair->reference_x.p1 - pair->reference_flipped.p1) >= 1 - 1e-9);
    CHECK(recheck_lightcone_pair(c, {c.target}, op, *pair));
    CHECK_FALSE(verify_clean(c, op).ok);
}

TEST_CASE("full parity tree covers every input") {
    Circuit c = build_parity_logdepth(8);
    auto op = ReferenceOp::for_circuit(ReferenceKind::parity, c);
    CHECK(lightcone(c, {c.target}).free_inputs.empty());
    CHECK_FALSE(lightcone_counterexample(c, {c.target}, op).has_value());
}

TEST_CASE("untouched target") {
    Circuit c{4, 0, 3, {Layer{{gate_cnot(0, 1), gate_h(2)}}}};
    auto pair = lightcone_counterexample(c, {3}, ReferenceOp::for_circuit(ReferenceKind::parity, c));
    REQUIRE(pair.has_value());
    CHECK(pair->flipped == 0);
    CHECK(pair->reading_x.p1 == 0);
    CHECK(pair->reading_flipped.p1 == 0);
}

TEST_CASE("recheck rejects a tampered pair") {
    Circuit c{3, 0, 2, {Layer{{gate_cnot(1, 2)}}}};
    auto op = ReferenceOp::for_circuit(ReferenceKind::parity, c);
    auto pair = lightcone_counterexample(c, {2}, op);
    REQUIRE(pair.has_value());
    CHECK(pair->flipped == 0);
    pair->flipped = 1;
    CHECK_FALSE(recheck_lightcone_pair(c, {2}, op, *pair));
}

TEST_CASE("depth bound trigger") {
    Circuit eight = truncated(build_parity_logdepth(8), 2);
    auto v = check_depth_bound(eight, ReferenceKind::parity);
    CHECK(v.bound_triggered);
    CHECK(v.refuted);

    // Four data wires, depth 2, arity 2: 2^2 = 4 is not below 4.
    Circuit four{4, 0, 3, {Layer{{gate_cnot(0, 1), gate_cnot(2, 3)}}, Layer{{gate_cnot(1, 3)}}}};
    v = check_depth_bound(four, ReferenceKind::parity);
    CHECK_FALSE(v.bound_triggered);
    CHECK_FALSE(v.counterexample.has_value());

    Circuit giant{6, 0, 5, {Layer{{gate_toffoli({0, 1, 2, 3, 4}, 5)}}}};
    CHECK_FALSE(check_depth_bound(giant, ReferenceKind::parity).bound_triggered);
}

TEST_CASE("fanout depth bound runs on the conjugate") {
    Circuit c{9, 0, 8, {Layer{{gate_cnot(8, 0)}}}};
    auto v = check_depth_bound(c, ReferenceKind::fanout);
    CHECK(v.effective_depth == 3);
    CHECK(v.bound_triggered);
    CHECK(v.refuted);
}

TEST_CASE("property: nesting and size bound on random circuits") {
    for (uint64_t seed = 0; seed < 200; seed++) {
        size_t n = 2 + seed % 9;
        size_t k = 1 + seed % 3;
        Circuit c = random_bounded_circuit(n, seed % 2, 1 + seed % 4, k, seed);
        auto r = lightcone(c, {c.target});
        for (size_t i = 0; i < r.sets.size(); i++) {
            CHECK(static_cast<double>(r.sets[i].size()) <= r.bound_per_level[i]);
            if (i > 0) {
                CHECK(wire_subset(r.sets[i - 1], r.sets[i]));
            }
        }
        CHECK(r.max_arity <= k);
    }
}

TEST_CASE("property: emitted pairs always re-check") {
    size_t emitted = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        Circuit c = random_bounded_circuit(8, 0, 2, 2, seed);
        auto op = ReferenceOp::for_circuit(ReferenceKind::parity, c);
        if (auto pair = lightcone_counterexample(c, {c.target}, op)) {
            emitted++;
            CHECK(recheck_lightcone_pair(c, {c.target}, op, *pair));
        }
    }
    CHECK(emitted == 100);
}
