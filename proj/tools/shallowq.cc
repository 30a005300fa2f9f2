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

// Command-line front end.
//
// Exit status: 0 ok, 1 negative verdict, 2 usage or input error, 3 internal
// invariant breach.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shallowq/adversary.h"
#include "shallowq/circuit_io.h"
#include "shallowq/constructions.h"
#include "shallowq/lightcone.h"
#include "shallowq/random_circuit.h"
#include "shallowq/verifier.h"
#include "shallowq/version.h"

using namespace shallowq;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_NEGATIVE = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_BREACH = 3;

constexpr size_t PRINT_AMPLITUDES_MAX_WIRES = 12;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string read_all(const std::string &path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_all(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text;
}

std::string bits_str(uint64_t bits, size_t num_wires) {
    std::string s;
    for (size_t w = 0; w < num_wires; w++) {
        s += ((bits >> w) & 1) ? '1' : '0';
    }
    return s;
}

std::string wires_str(const std::vector<Wire> &wires) {
    std::string s = "{";
    for (size_t k = 0; k < wires.size(); k++) {
        s += (k ? "," : "") + std::to_string(wires[k]);
    }
    return s + "}";
}

// Character i is wire i. A string one shorter than n skips the target, which
// then starts at 0.
uint64_t parse_input_bits(const std::string &text, const Circuit &c) {
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw UsageError("input '" + text + "' is not a bitstring");
        }
    }
    std::vector<Wire> order;
    if (text.size() == c.n) {
        order = wire_range(0, static_cast<Wire>(c.n));
    } else if (text.size() + 1 == c.n && c.target < c.n) {
        for (Wire w = 0; w < c.n; w++) {
            if (w != c.target) {
                order.push_back(w);
            }
        }
    } else {
        throw UsageError("input has " + std::to_string(text.size()) + " bits; the circuit has " +
                         std::to_string(c.n) + " data wires");
    }
    uint64_t bits = 0;
    for (size_t k = 0; k < order.size(); k++) {
        if (text[k] == '1') {
            bits |= uint64_t{1} << order[k];
        }
    }
    return bits;
}

Circuit z_form(const Circuit &c) {
    if (only_single_qubit_and_z(c)) {
        return c;
    }
    std::cout << "note: rewriting Toffoli and CNOT gates as H Z H first\n";
    return rewrite_toffoli_to_z(c);
}

int cmd_simulate(const std::string &path, const std::string &input) {
    Circuit c = load_circuit(read_all(path));
    uint64_t bits = parse_input_bits(input, c);
    auto wires = wire_range(0, static_cast<Wire>(c.num_wires()));
    PartialState out = run(c, PartialState::basis(wires, bits));
    std::printf("target p1 = %.6f\n", read_target(out, {c.target}).p1);
    if (c.num_wires() <= PRINT_AMPLITUDES_MAX_WIRES) {
        for (uint64_t k = 0; k < out.amps.size(); k++) {
            std::printf("|%s> %+.6f %+.6fi\n", bits_str(k, c.num_wires()).c_str(), out.amps[k].real(),
                        out.amps[k].imag());
        }
    }
    return EXIT_OK;
}

int cmd_verify(const std::string &path, const std::string &against, bool strict) {
    Circuit c = load_circuit(read_all(path));
    VerifyOptions options;
    options.strict_phase = strict;
    auto r = verify_clean(c, ReferenceOp::for_circuit(parse_reference_kind(against), c), options);
    std::cout << describe(r, c);
    return r.ok ? EXIT_OK : EXIT_NEGATIVE;
}

int cmd_lightcone(const std::string &path, const std::string &against) {
    Circuit c = load_circuit(read_all(path));
    auto v = check_depth_bound(c, parse_reference_kind(against));
    std::printf("max arity %zu, depth %zu, n %zu: %zu^%zu %s n\n", v.max_arity, v.effective_depth, v.n, v.max_arity,
                v.effective_depth, v.bound_triggered ? "<" : ">=");
    for (size_t i = 0; i < v.report.sets.size(); i++) {
        std::printf("S_%zu = %s (bound %.0f)\n", i + 1, wires_str(v.report.sets[i]).c_str(),
                    v.report.bound_per_level[i]);
    }
    std::printf("free inputs: %s\n", wires_str(v.report.free_inputs).c_str());
    if (v.refuted) {
        const auto &p = *v.counterexample;
        std::printf("counterexample: flip wire %u of |%s>: circuit p1 %.6f vs %.6f, reference p1 %.6f vs %.6f\n",
                    p.flipped, bits_str(p.x, c.num_wires()).c_str(), p.reading_x.p1, p.reading_flipped.p1,
                    p.reference_x.p1, p.reference_flipped.p1);
        std::printf("verdict: not-%s\n", against.c_str());
        return EXIT_NEGATIVE;
    }
    std::printf("verdict: inconclusive\n");
    return EXIT_OK;
}

int cmd_adversary(const std::string &path, const std::string &mode_name, const std::string &against,
                  const std::string &out, uint64_t seed, size_t trials) {
    Circuit c = z_form(load_circuit(read_all(path)));
    KillMode mode = parse_kill_mode(mode_name);
    ReferenceKind kind = parse_reference_kind(against);
    KillCertificate cert = kind == ReferenceKind::parity ? parity_certificate(c, mode) : fanout_certificate(c, mode);
    Circuit analysed = certified_circuit(c, cert);

    auto v = verify_kill(analysed, kill_run(analysed, mode), trials, seed);
    if (!v.ok) {
        throw InvariantBreach("kill verification failed: " + v.failure);
    }
    auto check = recheck_certificate(c, cert);
    if (!check.ok) {
        throw InvariantBreach("certificate does not re-check: " + check.failure);
    }
    for (const auto &rec : cert.history) {
        std::printf("k=%zu |K|=%zu bound %zu recruited %s killed %zu\n", rec.k, rec.committed.size(),
                    kill_size_bound(mode, c.ancillae, rec.k), wires_str(rec.recruited).c_str(), rec.killed.size());
    }
    std::printf("kill verification: %zu trials, max target p1 %.3g\n", v.readings.size(),
                *std::max_element(v.readings.begin(), v.readings.end()));
    if (cert.free_input) {
        std::printf("free input %u: circuit p1 %.3g / %.3g, reference p1 %.6f / %.6f\n", *cert.free_input,
                    cert.readings->circuit_zero, cert.readings->circuit_flipped, cert.readings->reference_zero,
                    cert.readings->reference_flipped);
    }
    std::printf("ancilla consistency: %s\n", cert.ancilla_consistency ? "yes" : "no");
    std::printf("verdict: %s\n", verdict_name(cert.verdict).c_str());
    if (!out.empty()) {
        write_all(out, serialize_certificate(cert));
    }
    return is_refutation(cert.verdict) ? EXIT_NEGATIVE : EXIT_OK;
}

int cmd_recheck(const std::string &path, const std::string &cert_path) {
    Circuit c = z_form(load_circuit(read_all(path)));
    auto check = recheck_certificate(c, parse_certificate(read_all(cert_path)));
    if (!check.ok) {
        std::printf("certificate rejected: %s\n", check.failure.c_str());
        return EXIT_NEGATIVE;
    }
    std::printf("certificate ok\n");
    return EXIT_OK;
}

int cmd_bound(size_t n, size_t a, const std::string &gate) {
    auto b = tradeoff_bound(n, a, parse_reference_kind(gate));
    std::printf("d ≥ %.2f\n", b.unbounded_toffoli);
    std::printf("bounded-arity gates: d ≥ %.2f\n", b.bounded_arity);
    return EXIT_OK;
}

int cmd_build(const std::string &what, size_t n, const std::string &out) {
    Circuit c;
    if (what == "parity-logdepth") {
        c = build_parity_logdepth(n);
    } else if (what == "fanout-via-parity") {
        c = conjugate_parity_to_fanout(build_parity_logdepth(n));
    } else {
        throw UsageError("unknown construction '" + what + "'");
    }
    write_all(out, serialize_circuit(c));
    return EXIT_OK;
}

int cmd_rewrite(const std::string &path, const std::string &rule, const std::string &out) {
    Circuit c = load_circuit(read_all(path));
    if (rule == "t2hzh") {
        c = rewrite_toffoli_to_z(c);
    } else if (rule == "conjugate-fanout") {
        c = conjugate_parity_to_fanout(c);
    } else {
        throw UsageError("unknown rule '" + rule + "'");
    }
    write_all(out, serialize_circuit(c));
    return EXIT_OK;
}

int cmd_random(size_t n, size_t a, size_t depth, size_t max_arity, uint64_t seed, const std::string &out) {
    Circuit c = max_arity == 0 ? random_z_circuit(n, a, depth, seed) : random_bounded_circuit(n, a, depth, max_arity, seed);
    write_all(out, serialize_circuit(c));
    return EXIT_OK;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"shallowq: depth lower bounds for parity and fanout circuits, checked by simulation"};
    app.set_version_flag("--version", std::string(VERSION));
    app.require_subcommand(1);

    std::string circuit;
    std::string against = "parity";
    std::string out;
    uint64_t seed = 0;

    auto *simulate = app.add_subcommand("simulate", "Run a circuit on a basis input");
    std::string input;
    simulate->add_option("--circuit", circuit, "Circuit file (default: stdin)");
    simulate->add_option("--input", input, "Bitstring, one character per data wire")->required();

    auto *verify = app.add_subcommand("verify", "Check clean computation of parity or fanout by brute force");
    bool strict = false;
    verify->add_option("--circuit", circuit, "Circuit file (default: stdin)");
    verify->add_option("--against", against)->check(CLI::IsMember({"parity", "fanout"}));
    verify->add_flag("--strict", strict, "Compare phases literally");

    auto *cone = app.add_subcommand("lightcone", "Cone-of-influence depth bound for bounded-arity circuits");
    cone->add_option("--circuit", circuit, "Circuit file (default: stdin)");
    cone->add_option("--against", against)->check(CLI::IsMember({"parity", "fanout"}));

    auto *adversary = app.add_subcommand("adversary", "Gate-killing adversary; writes a certificate");
    std::string mode = "improved";
    size_t trials = 20;
    adversary->add_option("--circuit", circuit, "Circuit file (default: stdin)");
    adversary->add_option("--mode", mode)->check(CLI::IsMember({"basic", "improved"}));
    adversary->add_option("--against", against)->check(CLI::IsMember({"parity", "fanout"}));
    adversary->add_option("--out", out, "Certificate file");
    adversary->add_option("--seed", seed, "Seed for the random kill-verification trials");
    adversary->add_option("--trials", trials, "Random |R> states tried");

    auto *recheck = app.add_subcommand("recheck", "Independently re-check a certificate");
    std::string certificate;
    recheck->add_option("--circuit", circuit, "Circuit file (default: stdin)");
    recheck->add_option("--certificate", certificate)->required();

    auto *bound = app.add_subcommand("bound", "Depth lower bound for n inputs and a ancillae");
    size_t n = 0;
    size_t a = 0;
    std::string gate = "parity";
    bound->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    bound->add_option("--a", a);
    bound->add_option("--gate", gate)->check(CLI::IsMember({"parity", "fanout"}));

    auto *build = app.add_subcommand("build", "Emit a construction as a circuit file");
    std::string what;
    build->add_option("construction", what)->required()->check(CLI::IsMember({"parity-logdepth", "fanout-via-parity"}));
    build->add_option("--n", n)->required()->check(CLI::Range(1, 62));
    build->add_option("--out", out);

    auto *rewrite = app.add_subcommand("rewrite", "Apply a circuit rewrite");
    std::string rule;
    rewrite->add_option("--circuit", circuit, "Circuit file (default: stdin)");
    rewrite->add_option("--rule", rule)->required()->check(CLI::IsMember({"t2hzh", "conjugate-fanout"}));
    rewrite->add_option("--out", out);

    auto *random = app.add_subcommand("random", "Emit a seeded random circuit");
    size_t depth = 4;
    size_t max_arity = 0;
    random->add_option("--n", n)->required()->check(CLI::Range(1, 62));
    random->add_option("--a", a);
    random->add_option("--depth", depth);
    random->add_option("--max-arity", max_arity, "0: single-qubit and Z-gates; k: gates of arity at most k");
    random->add_option("--seed", seed);
    random->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (*simulate) {
            return cmd_simulate(circuit, input);
        }
        if (*verify) {
            return cmd_verify(circuit, against, strict);
        }
        if (*cone) {
            return cmd_lightcone(circuit, against);
        }
        if (*adversary) {
            return cmd_adversary(circuit, mode, against, out, seed, trials);
        }
        if (*recheck) {
            return cmd_recheck(circuit, certificate);
        }
        if (*bound) {
            return cmd_bound(n, a, gate);
        }
        if (*build) {
            return cmd_build(what, n, out);
        }
        if (*rewrite) {
            return cmd_rewrite(circuit, rule, out);
        }
        if (*random) {
            return cmd_random(n, a, depth, max_arity, seed, out);
        }
    } catch (const InvariantBreach &e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return EXIT_BREACH;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
