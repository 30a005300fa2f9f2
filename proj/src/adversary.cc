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

#include "shallowq/adversary.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "shallowq/circuit_io.h"
#include "shallowq/verifier.h"
#include "shallowq/version.h"

namespace shallowq {

using nlohmann::ordered_json;

namespace {

// A committed wire counts as pinned to |0> only if psi has (numerically) no
// weight at all on its |1> half. Zeros introduced by recruitment survive every
// later gate exactly unless a non-diagonal gate acts on that wire.
constexpr double PINNED_ZERO_TOLERANCE = 1e-24;

constexpr double KILL_DEVIATION_TOLERANCE = 1e-10;

void require_adversary_input(const Circuit &c) {
    require_valid(c);
    if (!only_single_qubit_and_z(c)) {
        throw std::invalid_argument(
            "the adversary needs single-qubit and Z gates only; apply the Toffoli-to-Z rewrite first");
    }
    if (c.depth() == 0) {
        throw std::invalid_argument("the adversary needs a circuit of depth at least 1");
    }
}

std::vector<Wire> all_wires(const Circuit &c) {
    return wire_range(0, static_cast<Wire>(c.num_wires()));
}

void check_partition(const KillState &s, const Circuit &c) {
    if (s.psi.wires != s.committed) {
        throw InvariantBreach("psi is not over the committed wire set");
    }
    if (wire_union(s.committed, s.remaining) != all_wires(c) ||
        s.committed.size() + s.remaining.size() != c.num_wires()) {
        throw InvariantBreach("committed and remaining wires do not partition the circuit");
    }
    size_t bound = kill_size_bound(s.mode, c.ancillae, s.k);
    if (s.committed.size() > bound) {
        std::stringstream ss;
        ss << "committed set has " << s.committed.size() << " wires after " << s.k << " layers, above the "
           << kill_mode_name(s.mode) << " bound " << bound;
        throw InvariantBreach(ss.str());
    }
    if (std::abs(s.psi.norm() - 1) > NORM_TOLERANCE) {
        throw InvariantBreach("psi lost normalization");
    }
}

std::string reason_name(KillReason r) {
    return r == KillReason::recruited ? "recruited" : "pinned-zero";
}

KillReason parse_reason(const std::string &s) {
    if (s == "recruited") {
        return KillReason::recruited;
    }
    if (s == "pinned-zero") {
        return KillReason::pinned_zero;
    }
    throw std::invalid_argument("unknown kill reason '" + s + "'");
}

}  // namespace

std::string kill_mode_name(KillMode mode) {
    return mode == KillMode::basic ? "basic" : "improved";
}

KillMode parse_kill_mode(const std::string &name) {
    if (name == "basic") {
        return KillMode::basic;
    }
    if (name == "improved") {
        return KillMode::improved;
    }
    throw std::invalid_argument("unknown kill mode '" + name + "' (expected basic or improved)");
}

bool KillState::is_killed(size_t layer_index, size_t gate_index) const {
    return std::any_of(killed.begin(), killed.end(), [&](const KilledGate &g) {
        return g.layer_index == layer_index && g.gate_index == gate_index;
    });
}

size_t kill_size_bound(KillMode mode, size_t ancillae, size_t k) {
    size_t exponent = mode == KillMode::basic ? k : (k + 1) / 2;
    if (exponent >= 62) {
        return SIZE_MAX;
    }
    return (ancillae + 1) << exponent;
}

KillState kill_base(const Circuit &c, KillMode mode) {
    require_adversary_input(c);
    KillState s;
    s.k = 1;
    s.mode = mode;
    s.committed.push_back(c.target);
    for (Wire w = static_cast<Wire>(c.n); w < c.num_wires(); w++) {
        if (w != c.target) {
            s.committed.push_back(w);
        }
    }
    std::sort(s.committed.begin(), s.committed.end());
    s.remaining = wire_difference(all_wires(c), s.committed);

    size_t li = c.layer_index_of(1);
    const auto &gates = c.layers[li].gates;
    s.psi = PartialState{{}, {Complex{1}}};
    for (Wire w : s.committed) {
        PartialState factor = PartialState::single(w, 1, 0);
        for (size_t gi = 0; gi < gates.size(); gi++) {
            if (!gate_touches(gates[gi], w)) {
                continue;
            }
            if (const auto *u = std::get_if<SingleQubitGate>(&gates[gi])) {
                // S^dagger |0> is the conjugated first row of S.
                factor = PartialState::single(w, std::conj(u->u[0]), std::conj(u->u[1]));
            } else if (!s.is_killed(li, gi)) {
                s.killed.push_back(KilledGate{1, li, gi, w, KillReason::pinned_zero});
            }
        }
        if (factor.amps[1] == Complex{0}) {
            s.fresh_zero.push_back(w);
        }
        s.psi = tensor(s.psi, factor);
    }
    s.history.push_back(KillRecord{1, s.committed, {}, s.killed});
    check_partition(s, c);
    return s;
}

KillState kill_step(KillState s, const Circuit &c) {
    if (s.k >= c.depth()) {
        throw std::out_of_range("kill_step: every layer has already been handled");
    }
    size_t k = s.k + 1;
    size_t li = c.layer_index_of(k);
    const auto &gates = c.layers[li].gates;

    auto committed = [&](Wire w) {
        return std::binary_search(s.committed.begin(), s.committed.end(), w);
    };

    std::vector<KilledGate> killed_now;
    std::vector<Wire> recruits;
    std::vector<size_t> committed_gates;
    for (size_t gi = 0; gi < gates.size(); gi++) {
        std::vector<Wire> inside;
        std::vector<Wire> outside;
        for (Wire w : gate_support(gates[gi])) {
            (committed(w) ? inside : outside).push_back(w);
        }
        if (inside.empty()) {
            continue;
        }
        if (outside.empty()) {
            committed_gates.push_back(gi);
            continue;
        }
        if (!is_z_gate(gates[gi])) {
            throw InvariantBreach("non-Z gate " + gate_str(gates[gi]) + " straddles the committed set");
        }
        if (s.mode == KillMode::improved) {
            auto zero = std::find_if(inside.begin(), inside.end(), [&](Wire w) {
                return s.psi.probability_one(w) <= PINNED_ZERO_TOLERANCE;
            });
            if (zero != inside.end()) {
                killed_now.push_back(KilledGate{k, li, gi, *zero, KillReason::pinned_zero});
                continue;
            }
        }
        // Recruit the least ancilla if there is one, else the least data wire.
        auto pick = std::find_if(outside.begin(), outside.end(), [&](Wire w) {
            return c.is_ancilla(w);
        });
        Wire recruit = pick != outside.end() ? *pick : outside.front();
        recruits.push_back(recruit);
        killed_now.push_back(KilledGate{k, li, gi, recruit, KillReason::recruited});
    }

    // psi <- (L^K)^dagger psi. Killed gates go through the simulator with their
    // witness declared |0>, which turns them into the identity.
    ApplyOptions adjoint;
    adjoint.adjoint = true;
    for (size_t gi : committed_gates) {
        apply_gate_in_place(gates[gi], s.psi, adjoint);
    }
    for (const auto &kg : killed_now) {
        Wire witness[1]{kg.witness};
        ApplyOptions options;
        options.adjoint = true;
        options.fixed_zero = witness;
        apply_gate_in_place(gates[kg.gate_index], s.psi, options);
    }
    std::sort(recruits.begin(), recruits.end());
    if (!recruits.empty()) {
        s.psi = tensor(s.psi, PartialState::zeros(recruits));
    }

    s.k = k;
    s.committed = wire_union(s.committed, recruits);
    s.remaining = wire_difference(s.remaining, recruits);
    s.fresh_zero = recruits;
    s.killed.insert(s.killed.end(), killed_now.begin(), killed_now.end());
    s.history.push_back(KillRecord{k, s.committed, recruits, killed_now});
    check_partition(s, c);
    return s;
}

KillState kill_run(const Circuit &c, KillMode mode) {
    KillState s = kill_base(c, mode);
    while (s.k < c.depth()) {
        s = kill_step(std::move(s), c);
    }
    return s;
}

KillVerification verify_kill(const Circuit &c, const KillState &s, size_t trials, uint64_t seed) {
    KillVerification out{true, {}, 0, 0, {}};
    std::mt19937_64 rng(seed);
    size_t first_layer = c.depth() - s.k;
    MeasurementSpec target{c.target};

    for (size_t t = 0; t <= trials; t++) {
        PartialState r = t == 0 ? PartialState::zeros(s.remaining) : PartialState::random(s.remaining, rng);
        PartialState start = tensor(r, s.psi);

        PartialState skipped = start;
        for (size_t li = first_layer; li < c.depth(); li++) {
            const auto &gates = c.layers[li].gates;
            for (size_t gi = 0; gi < gates.size(); gi++) {
                auto kg = std::find_if(s.killed.begin(), s.killed.end(), [&](const KilledGate &g) {
                    return g.layer_index == li && g.gate_index == gi;
                });
                if (kg == s.killed.end()) {
                    apply_gate_in_place(gates[gi], skipped);
                    continue;
                }
                out.max_witness_p1 = std::max(out.max_witness_p1, skipped.probability_one(kg->witness));
                Wire witness[1]{kg->witness};
                ApplyOptions options;
                options.fixed_zero = witness;
                apply_gate_in_place(gates[gi], skipped, options);
            }
        }
        PartialState full = run(c, start, first_layer, c.depth());

        double p1 = read_target(skipped, target).p1;
        out.readings.push_back(p1);
        out.max_kill_deviation = std::max(out.max_kill_deviation, max_amplitude_diff(skipped, full));
        if (out.ok && p1 > EXACT_ZERO) {
            out.ok = false;
            out.failure = "trial " + std::to_string(t) + ": target reads 1 with probability " + std::to_string(p1);
        }
    }
    if (out.ok && out.max_witness_p1 > EXACT_ZERO) {
        out.ok = false;
        out.failure = "a killed gate's witness wire was not |0> when the gate acted";
    }
    if (out.ok && out.max_kill_deviation > KILL_DEVIATION_TOLERANCE) {
        out.ok = false;
        out.failure = "skipping killed gates changed the state";
    }
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::not_parity:
            return "not-parity";
        case Verdict::not_fanout:
            return "not-fanout";
        case Verdict::not_parity_restricted:
            return "not-parity-restricted";
        case Verdict::not_fanout_restricted:
            return "not-fanout-restricted";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    throw std::logic_error("bad verdict");
}

Verdict parse_verdict(const std::string &name) {
    for (Verdict v : {Verdict::not_parity, Verdict::not_fanout, Verdict::not_parity_restricted,
                      Verdict::not_fanout_restricted, Verdict::inconclusive}) {
        if (verdict_name(v) == name) {
            return v;
        }
    }
    throw std::invalid_argument("unknown verdict '" + name + "'");
}

bool is_refutation(Verdict v) {
    return v != Verdict::inconclusive;
}

KillCertificate parity_certificate(const Circuit &c, KillMode mode) {
    KillState s = kill_run(c, mode);

    KillCertificate cert;
    cert.version = VERSION;
    cert.circuit_hash = circuit_hash(c);
    cert.transform = "none";
    cert.mode = mode;
    cert.against = ReferenceKind::parity;
    cert.n = c.n;
    cert.ancillae = c.ancillae;
    cert.target = c.target;
    cert.history = s.history;
    cert.psi_final = s.psi;
    cert.ancilla_consistency = true;
    for (Wire w = static_cast<Wire>(c.n); w < c.num_wires(); w++) {
        if (s.psi.probability_one(w) > EXACT_ZERO) {
            cert.ancilla_consistency = false;
        }
    }
    for (Wire w : s.remaining) {
        if (w < c.n && w != c.target) {
            cert.free_input = w;
            break;
        }
    }
    if (!cert.free_input) {
        cert.verdict = Verdict::inconclusive;
        return cert;
    }

    ReferenceOp parity = ReferenceOp::for_circuit(ReferenceKind::parity, c);
    MeasurementSpec target{c.target};
    PartialState zero_input = tensor(PartialState::zeros(s.remaining), s.psi);
    PartialState flipped_input = tensor(PartialState::basis(s.remaining, uint64_t{1} << *cert.free_input), s.psi);
    CertificateReadings readings{
        read_target(run(c, zero_input), target).p1,
        read_target(run(c, flipped_input), target).p1,
        read_target(apply_reference(parity, zero_input), target).p1,
        read_target(apply_reference(parity, flipped_input), target).p1,
    };
    if (readings.circuit_zero > EXACT_ZERO || readings.circuit_flipped > EXACT_ZERO) {
        throw InvariantBreach("witness state does not force the target to 0");
    }
    // Flipping one input flips parity on every basis component.
    if (std::abs(readings.reference_zero + readings.reference_flipped - 1) > EXACT_ZERO) {
        throw InvariantBreach("reference parity readings are not complementary");
    }
    cert.readings = readings;
    cert.verdict = cert.ancilla_consistency ? Verdict::not_parity : Verdict::not_parity_restricted;
    return cert;
}

KillCertificate fanout_certificate(const Circuit &c, KillMode mode) {
    KillCertificate cert = parity_certificate(conjugate_parity_to_fanout(c), mode);
    cert.transform = "hadamard-conjugate";
    cert.against = ReferenceKind::fanout;
    if (cert.verdict == Verdict::not_parity) {
        cert.verdict = Verdict::not_fanout;
    } else if (cert.verdict == Verdict::not_parity_restricted) {
        cert.verdict = Verdict::not_fanout_restricted;
    }
    return cert;
}

Circuit certified_circuit(const Circuit &c, const KillCertificate &cert) {
    if (cert.transform == "none") {
        return c;
    }
    if (cert.transform == "hadamard-conjugate") {
        return conjugate_parity_to_fanout(c);
    }
    throw std::invalid_argument("unknown certificate transform '" + cert.transform + "'");
}

CertificateCheck recheck_certificate(const Circuit &c, const KillCertificate &cert) {
    auto fail = [](std::string why) {
        return CertificateCheck{false, std::move(why)};
    };
    Circuit analysed = certified_circuit(c, cert);
    if (circuit_hash(analysed) != cert.circuit_hash) {
        return fail("circuit hash mismatch");
    }
    if (cert.n != c.n || cert.ancillae != c.ancillae || cert.target != c.target) {
        return fail("circuit shape mismatch");
    }
    if (cert.history.empty() || cert.history.back().committed != cert.psi_final.wires) {
        return fail("psi_final is not over the final committed set");
    }
    if (std::abs(cert.psi_final.norm() - 1) > NORM_TOLERANCE) {
        return fail("psi_final is not normalized");
    }
    const auto &committed = cert.psi_final.wires;
    auto remaining = wire_difference(wire_range(0, static_cast<Wire>(c.num_wires())), committed);
    if (!is_refutation(cert.verdict)) {
        for (Wire w : remaining) {
            if (w < c.n && w != c.target) {
                return fail("inconclusive verdict although data wire " + std::to_string(w) + " is free");
            }
        }
        return CertificateCheck{true, {}};
    }
    if (!cert.free_input || !cert.readings) {
        return fail("refutation without a free input and readings");
    }
    Wire free = *cert.free_input;
    if (free >= c.n || free == c.target || std::binary_search(committed.begin(), committed.end(), free)) {
        return fail("free input is not a data wire outside the committed set");
    }
    bool restricted = cert.verdict == Verdict::not_parity_restricted || cert.verdict == Verdict::not_fanout_restricted;
    bool consistent = true;
    for (Wire w = static_cast<Wire>(c.n); w < c.num_wires(); w++) {
        if (cert.psi_final.probability_one(w) > EXACT_ZERO) {
            consistent = false;
        }
    }
    if (consistent != cert.ancilla_consistency || restricted == consistent) {
        return fail("ancilla consistency flag does not match psi_final");
    }

    // Fresh simulation on the verifier's sparse engine.
    auto input_state = [&](uint64_t remaining_bits) {
        SparseState out;
        for (uint64_t k = 0; k < cert.psi_final.amps.size(); k++) {
            if (cert.psi_final.amps[k] != Complex{0}) {
                out[cert.psi_final.global_bits(k) | remaining_bits] = cert.psi_final.amps[k];
            }
        }
        return out;
    };
    ReferenceOp parity = ReferenceOp::for_circuit(ReferenceKind::parity, analysed);
    auto reference_p1 = [&](const SparseState &in) {
        double total = 0;
        for (const auto &[k, a] : in) {
            if ((parity.apply_to_bits(k) >> c.target) & 1) {
                total += std::norm(a);
            }
        }
        return total;
    };
    SparseState zero_in = input_state(0);
    SparseState flipped_in = input_state(uint64_t{1} << free);
    double c0 = sparse_probability_one(sparse_run(analysed, zero_in), c.target);
    double c1 = sparse_probability_one(sparse_run(analysed, flipped_in), c.target);
    double p0 = reference_p1(zero_in);
    double p1 = reference_p1(flipped_in);
    if (c0 > EXACT_ZERO || c1 > EXACT_ZERO) {
        return fail("re-simulated circuit target is not 0");
    }
    if (std::abs(p0 + p1 - 1) > EXACT_ZERO || std::max(p0, p1) < 0.5 - EXACT_ZERO) {
        return fail("reference parity does not separate the two inputs");
    }
    const auto &r = *cert.readings;
    if (std::abs(r.circuit_zero - c0) > EXACT_ZERO || std::abs(r.circuit_flipped - c1) > EXACT_ZERO ||
        std::abs(r.reference_zero - p0) > EXACT_ZERO || std::abs(r.reference_flipped - p1) > EXACT_ZERO) {
        return fail("recorded readings differ from re-simulation");
    }
    return CertificateCheck{true, {}};
}

namespace {

ordered_json wires_json(const std::vector<Wire> &wires) {
    ordered_json out = ordered_json::array();
    for (Wire w : wires) {
        out.push_back(w);
    }
    return out;
}

std::vector<Wire> read_wire_list(const ordered_json &v) {
    std::vector<Wire> out;
    for (const auto &w : v) {
        out.push_back(w.get<Wire>());
    }
    if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw std::invalid_argument("wire lists in a certificate must be strictly increasing");
    }
    return out;
}

const ordered_json &require(const ordered_json &obj, const char *name) {
    if (!obj.is_object() || !obj.contains(name)) {
        throw std::invalid_argument(std::string("certificate is missing field '") + name + "'");
    }
    return obj.at(name);
}

}  // namespace

std::string serialize_certificate(const KillCertificate &cert) {
    ordered_json doc;
    doc["format"] = "shallowq-kill-certificate";
    doc["version"] = cert.version;
    doc["circuit_hash"] = cert.circuit_hash;
    doc["transform"] = cert.transform;
    doc["mode"] = kill_mode_name(cert.mode);
    doc["against"] = reference_kind_name(cert.against);
    doc["n"] = cert.n;
    doc["ancillae"] = cert.ancillae;
    doc["target"] = cert.target;
    ordered_json history = ordered_json::array();
    for (const auto &rec : cert.history) {
        ordered_json r;
        r["k"] = rec.k;
        r["committed"] = wires_json(rec.committed);
        r["recruited"] = wires_json(rec.recruited);
        ordered_json killed = ordered_json::array();
        for (const auto &g : rec.killed) {
            ordered_json kg;
            kg["k"] = g.k;
            kg["layer"] = g.layer_index;
            kg["gate"] = g.gate_index;
            kg["witness"] = g.witness;
            kg["reason"] = reason_name(g.reason);
            killed.push_back(kg);
        }
        r["killed"] = killed;
        history.push_back(r);
    }
    doc["history"] = history;
    ordered_json amps = ordered_json::array();
    for (Complex a : cert.psi_final.amps) {
        amps.push_back(ordered_json::array({a.real(), a.imag()}));
    }
    doc["psi_final"] = ordered_json{{"wires", wires_json(cert.psi_final.wires)}, {"amplitudes", amps}};
    doc["free_input"] = cert.free_input ? ordered_json(*cert.free_input) : ordered_json(nullptr);
    if (cert.readings) {
        doc["readings"] = ordered_json{
            {"circuit_zero", cert.readings->circuit_zero},
            {"circuit_flipped", cert.readings->circuit_flipped},
            {"reference_zero", cert.readings->reference_zero},
            {"reference_flipped", cert.readings->reference_flipped},
        };
    } else {
        doc["readings"] = nullptr;
    }
    doc["ancilla_consistency"] = cert.ancilla_consistency;
    doc["verdict"] = verdict_name(cert.verdict);
    return doc.dump(2) + "\n";
}

KillCertificate parse_certificate(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const ordered_json::parse_error &e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        if (require(doc, "format") != "shallowq-kill-certificate") {
            throw std::invalid_argument("not a kill certificate");
        }
        KillCertificate cert;
        cert.version = require(doc, "version").get<std::string>();
        cert.circuit_hash = require(doc, "circuit_hash").get<std::string>();
        cert.transform = require(doc, "transform").get<std::string>();
        cert.mode = parse_kill_mode(require(doc, "mode").get<std::string>());
        cert.against = parse_reference_kind(require(doc, "against").get<std::string>());
        cert.n = require(doc, "n").get<size_t>();
        cert.ancillae = require(doc, "ancillae").get<size_t>();
        cert.target = require(doc, "target").get<Wire>();
        for (const auto &r : require(doc, "history")) {
            KillRecord rec;
            rec.k = require(r, "k").get<size_t>();
            rec.committed = read_wire_list(require(r, "committed"));
            rec.recruited = read_wire_list(require(r, "recruited"));
            for (const auto &kg : require(r, "killed")) {
                rec.killed.push_back(KilledGate{
                    require(kg, "k").get<size_t>(),
                    require(kg, "layer").get<size_t>(),
                    require(kg, "gate").get<size_t>(),
                    require(kg, "witness").get<Wire>(),
                    parse_reason(require(kg, "reason").get<std::string>()),
                });
            }
            cert.history.push_back(std::move(rec));
        }
        const auto &psi = require(doc, "psi_final");
        cert.psi_final.wires = read_wire_list(require(psi, "wires"));
        for (const auto &a : require(psi, "amplitudes")) {
            if (!a.is_array() || a.size() != 2) {
                throw std::invalid_argument("amplitudes must be [re, im] pairs");
            }
            cert.psi_final.amps.emplace_back(a[0].get<double>(), a[1].get<double>());
        }
        if (cert.psi_final.wires.size() > MAX_STATE_WIRES ||
            cert.psi_final.amps.size() != (size_t{1} << cert.psi_final.wires.size())) {
            throw std::invalid_argument("psi_final has the wrong number of amplitudes");
        }
        if (const auto &f = require(doc, "free_input"); !f.is_null()) {
            cert.free_input = f.get<Wire>();
        }
        if (const auto &r = require(doc, "readings"); !r.is_null()) {
            cert.readings = CertificateReadings{
                require(r, "circuit_zero").get<double>(),
                require(r, "circuit_flipped").get<double>(),
                require(r, "reference_zero").get<double>(),
                require(r, "reference_flipped").get<double>(),
            };
        }
        cert.ancilla_consistency = require(doc, "ancilla_consistency").get<bool>();
        cert.verdict = parse_verdict(require(doc, "verdict").get<std::string>());
        return cert;
    } catch (const ordered_json::exception &e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

bool robust_check(const Circuit &c, const ReferenceOp &against) {
    if (c.num_wires() > SCAN_MAX_WIRES) {
        throw std::invalid_argument("robust_check is limited to " + std::to_string(SCAN_MAX_WIRES) + " wires");
    }
    require_valid(c);
    auto wires = all_wires(c);
    uint64_t ancilla_mask = ((uint64_t{1} << c.ancillae) - 1) << c.n;
    for (uint64_t bits = 0; bits < (uint64_t{1} << c.num_wires()); bits++) {
        PartialState out = run(c, PartialState::basis(wires, bits));
        uint64_t data = bits & ~ancilla_mask;
        uint64_t expected = against.apply_to_bits(data) | (bits & ancilla_mask);
        Complex hit = out.amps[expected];
        if (std::abs(hit) < 1 - VERIFY_TOLERANCE) {
            return false;
        }
        Complex phase = hit / std::abs(hit);
        for (uint64_t k = 0; k < out.amps.size(); k++) {
            Complex want = k == expected ? phase : Complex{0};
            if (std::abs(out.amps[k] - want) > VERIFY_TOLERANCE) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace shallowq
