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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "shallowq/adversary.h"
#include "shallowq/constructions.h"
#include "shallowq/lightcone.h"
#include "shallowq/random_circuit.h"
#include "shallowq/verifier.h"

using namespace shallowq;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<Wire> all_wires(const Circuit &c) {
    return wire_range(0, static_cast<Wire>(c.num_wires()));
}

Outcome parity_construction() {
    std::string detail;
    bool pass = true;
    for (size_t n : {1, 2, 4, 8, 16}) {
        Circuit c = build_parity_logdepth(n);
        auto r = verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c));
        bool ok = r.ok && r.max_deviation <= 1e-9 && c.depth() == parity_logdepth_depth(n);
        pass = pass && ok;
        detail += "n=" + std::to_string(n) + " depth " + std::to_string(c.depth()) + (ok ? " ok; " : " FAILED; ");
    }
    return {pass, detail};
}

Outcome hadamard_identity() {
    double worst = 0;
    for (size_t n = 1; n <= 3; n++) {
        Circuit h{n + 1, 0, static_cast<Wire>(n), {hadamard_layer(all_wires(Circuit{n + 1, 0, 0, {}}))}};
        DenseMatrix hh = dense_operator(h);
        DenseMatrix p = dense_reference(ReferenceOp::standard(ReferenceKind::parity, n), n + 1);
        DenseMatrix f = dense_reference(ReferenceOp::standard(ReferenceKind::fanout, n), n + 1);
        worst = std::max(worst, (hh * p * hh).max_abs_diff(f));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max entry error %.3g for n = 1..3", worst);
    return {worst <= 1e-10, buf};
}

Outcome toffoli_rewrite() {
    double worst = 0;
    for (size_t controls = 1; controls <= 5; controls++) {
        size_t wires = controls + 1;
        Circuit t{wires, 0, static_cast<Wire>(controls), {Layer{{gate_toffoli(wire_range(0, controls), controls)}}}};
        // Reference matrix straight from the definition b xor AND(x).
        DenseMatrix want{size_t{1} << wires, std::vector<Complex>(size_t{1} << (2 * wires))};
        uint64_t mask = (uint64_t{1} << controls) - 1;
        for (uint64_t x = 0; x < want.dim; x++) {
            uint64_t y = (x & mask) == mask ? x ^ (uint64_t{1} << controls) : x;
            want.at(y, x) = 1;
        }
        Circuit r = rewrite_toffoli_to_z(t);
        if (!only_single_qubit_and_z(r)) {
            return {false, "rewrite left a permutation gate"};
        }
        worst = std::max(worst, dense_operator(r).max_abs_diff(want));
        worst = std::max(worst, dense_operator(t).max_abs_diff(want));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max entry error %.3g for 1..5 controls", worst);
    return {worst <= 1e-12, buf};
}

Outcome lightcone_campaign() {
    size_t found = 0;
    size_t rechecked = 0;
    for (uint64_t seed = 0; seed < 200; seed++) {
        Circuit c = random_bounded_circuit(8, 0, 2, 2, seed);
        auto op = ReferenceOp::for_circuit(ReferenceKind::parity, c);
        auto pair = lightcone_counterexample(c, {c.target}, op);
        if (!pair) {
            continue;
        }
        found++;
        bool readings = std::abs(pair->reading_x.p1 - pair->reading_flipped.p1) <= 1e-9 &&
                        std::abs(pair->reference_x.p1 - pair->reference_flipped.p1) >= 1 - 1e-9;
        rechecked += readings && recheck_lightcone_pair(c, {c.target}, op, *pair);
    }
    return {found == 200 && rechecked == 200,
            std::to_string(found) + "/200 counterexamples, " + std::to_string(rechecked) + " re-verified"};
}

struct KillCampaign {
    size_t breaches[2] = {0, 0};
    size_t verified[2] = {0, 0};
    double worst_p1 = 0;
    std::string first_breach;
};

KillCampaign &kill_campaign() {
    static KillCampaign result = [] {
        KillCampaign out;
        for (uint64_t seed = 0; seed < 100; seed++) {
            Circuit c = random_z_circuit(12, 0, 4, seed);
            for (KillMode mode : {KillMode::basic, KillMode::improved}) {
                size_t m = mode == KillMode::basic ? 0 : 1;
                try {
                    KillState s = kill_run(c, mode);
                    auto v = verify_kill(c, s, 20, seed);
                    for (double p : v.readings) {
                        out.worst_p1 = std::max(out.worst_p1, p);
                    }
                    out.verified[m] += v.ok;
                } catch (const InvariantBreach &e) {
                    out.breaches[m]++;
                    if (out.first_breach.empty()) {
                        out.first_breach = "seed " + std::to_string(seed) + " " + kill_mode_name(mode) + ": " + e.what();
                    }
                }
            }
        }
        return out;
    }();
    return result;
}

Outcome kill_soundness() {
    const auto &k = kill_campaign();
    char buf[256];
    std::snprintf(buf, sizeof buf, "basic %zu/100 verified (%zu breaches), improved %zu/100 verified (%zu breaches), max p1 %.3g",
                  k.verified[0], k.breaches[0], k.verified[1], k.breaches[1], k.worst_p1);
    std::string detail = buf;
    if (!k.first_breach.empty()) {
        detail += "; first breach: " + k.first_breach;
    }
    bool pass = k.breaches[0] == 0 && k.breaches[1] == 0 && k.verified[0] == 100 && k.verified[1] == 100 &&
                k.worst_p1 <= 1e-9;
    return {pass, detail};
}

Outcome theorem_campaign() {
    size_t refuted = 0;
    size_t rechecked = 0;
    size_t breaches = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        Circuit c = random_z_circuit(12, 0, 4, seed);
        try {
            KillCertificate cert = parity_certificate(c, KillMode::improved);
            refuted += cert.verdict == Verdict::not_parity;
            rechecked += cert.verdict == Verdict::not_parity && recheck_certificate(c, cert).ok &&
                         cert.readings->circuit_zero <= 1e-9 && cert.readings->circuit_flipped <= 1e-9;
        } catch (const InvariantBreach &) {
            breaches++;
        }
    }
    // Cross-check with the brute-force verifier on circuits small enough for it.
    size_t confirmed = 0;
    for (uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = random_z_circuit(10, 0, 4, seed);
        confirmed += !verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c)).ok;
    }
    std::string detail = std::to_string(refuted) + "/100 not-parity, " + std::to_string(rechecked) +
                         " re-simulated, " + std::to_string(breaches) + " bound breaches; verifier confirms " +
                         std::to_string(confirmed) + "/10 (n = 10)";
    return {refuted == 100 && rechecked == 100 && confirmed == 10, detail};
}

Outcome tradeoff() {
    double a = tradeoff_bound(1024, 0, ReferenceKind::parity).unbounded_toffoli;
    double b = tradeoff_bound(1024, 31, ReferenceKind::parity).unbounded_toffoli;
    double c = tradeoff_bound(1024, 0, ReferenceKind::fanout).unbounded_toffoli;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.1f, %.1f, %.1f", a, b, c);
    return {a == 20.0 && b == 10.0 && c == 18.0, buf};
}

Outcome no_false_accusation() {
    Circuit c = rewrite_toffoli_to_z(build_parity_logdepth(8));
    std::string detail;
    bool pass = true;
    for (KillMode mode : {KillMode::basic, KillMode::improved}) {
        try {
            KillCertificate cert = parity_certificate(c, mode);
            pass = pass && cert.verdict == Verdict::inconclusive;
            detail += kill_mode_name(mode) + " " + verdict_name(cert.verdict) + "; ";
        } catch (const InvariantBreach &e) {
            pass = false;
            detail += kill_mode_name(mode) + " breach: " + e.what() + "; ";
        }
    }
    bool clean = verify_clean(c, ReferenceOp::for_circuit(ReferenceKind::parity, c)).ok;
    detail += clean ? "rewritten circuit verifies" : "rewritten circuit FAILS verification";
    return {pass && clean, detail};
}

Outcome oracle_containment() {
    size_t violations = 0;
    for (uint64_t seed = 0; seed < 200; seed++) {
        size_t a = seed % 3;
        size_t n = 2 + seed % (7 - a);
        Circuit c = random_bounded_circuit(n, a, 1 + seed % 4, 2 + seed % 2, seed);
        if (!wire_subset(sensitivity_scan(c, {c.target}), lightcone(c, {c.target}).deepest())) {
            violations++;
        }
    }
    return {violations == 0, std::to_string(violations) + " violations over 200 circuits"};
}

Circuit sequence(size_t n, size_t a, Wire target, std::vector<Gate> gates) {
    Circuit c{n, a, target, {}};
    for (auto &g : gates) {
        c.layers.push_back(Layer{{g}});
    }
    return c;
}

Outcome robust_examples() {
    Circuit plain = build_parity_logdepth(3);
    Circuit through_ancilla = sequence(
        3, 1, 2, {gate_cnot(3, 2), gate_cnot(0, 3), gate_cnot(1, 3), gate_cnot(3, 2), gate_cnot(1, 3), gate_cnot(0, 3)});
    Circuit flipped = through_ancilla;
    flipped.layers.push_back(Layer{{gate_x(3)}});
    bool a = robust_check(plain, ReferenceOp::for_circuit(ReferenceKind::parity, plain));
    bool b = robust_check(through_ancilla, ReferenceOp::for_circuit(ReferenceKind::parity, through_ancilla));
    bool c = robust_check(flipped, ReferenceOp::for_circuit(ReferenceKind::parity, flipped));
    auto s = [](bool v) {
        return std::string(v ? "true" : "false");
    };
    return {a && b && !c, s(a) + "/" + s(b) + "/" + s(c)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double seconds;
        std::function<Outcome()> check;
    };
    std::vector<Criterion> criteria{
        {1, "parity construction verifies at its documented depth", 10, parity_construction},
        {2, "Hadamard conjugation of parity is fanout", 1, hadamard_identity},
        {3, "Toffoli equals H Z H", 1, toffoli_rewrite},
        {4, "lightcone counterexamples on 200 shallow circuits", 30, lightcone_campaign},
        {5, "kill construction size bounds and soundness", 60, kill_soundness},
        {6, "every campaign circuit is refuted and re-verified", 60, theorem_campaign},
        {7, "ancilla tradeoff bound values", 1, tradeoff},
        {8, "no false accusation of the parity construction", 10, no_false_accusation},
        {9, "sensitivity stays inside the lightcone", 30, oracle_containment},
        {10, "robust computation examples", 1, robust_examples},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = elapsed <= c.seconds;
        bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("criterion %2d: %s  %s (%s) [%.2fs of %.0fs%s]\n", c.id, pass ? "PASS" : "FAIL", c.name,
                    o.detail.c_str(), elapsed, c.seconds, in_time ? "" : ", too slow");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
