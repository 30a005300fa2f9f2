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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace shallowq {

namespace {

constexpr double PRUNE = 1e-30;

std::string bits_str(uint64_t bits, size_t num_wires) {
    std::string s;
    for (size_t w = 0; w < num_wires; w++) {
        s += ((bits >> w) & 1) ? '1' : '0';
    }
    return s;
}

void sparse_apply(const Gate &g, SparseState &state) {
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
        uint64_t bit = uint64_t{1} << s->wire;
        SparseState out;
        out.reserve(state.size() * 2);
        for (const auto &[k, a] : state) {
            size_t col = (k & bit) ? 1 : 0;
            out[k & ~bit] += s->u[col] * a;
            out[k | bit] += s->u[2 + col] * a;
        }
        std::erase_if(out, [](const auto &e) {
            return std::norm(e.second) < PRUNE;
        });
        state = std::move(out);
        return;
    }
    if (const auto *z = std::get_if<ZGate>(&g)) {
        uint64_t mask = 0;
        for (Wire w : z->wires) {
            mask |= uint64_t{1} << w;
        }
        for (auto &[k, a] : state) {
            if ((k & mask) == mask) {
                a = -a;
            }
        }
        return;
    }
    uint64_t controls = 0;
    uint64_t target = 0;
    if (const auto *t = std::get_if<ToffoliGate>(&g)) {
        for (Wire w : t->controls) {
            controls |= uint64_t{1} << w;
        }
        target = uint64_t{1} << t->target;
    } else {
        const auto &c = std::get<CnotGate>(g);
        controls = uint64_t{1} << c.control;
        target = uint64_t{1} << c.target;
    }
    SparseState out;
    out.reserve(state.size());
    for (const auto &[k, a] : state) {
        out[(k & controls) == controls ? k ^ target : k] = a;
    }
    state = std::move(out);
}

}  // namespace

SparseState sparse_run(const Circuit &c, uint64_t input_bits) {
    return sparse_run(c, SparseState{{input_bits, Complex{1}}});
}

SparseState sparse_run(const Circuit &c, SparseState state) {
    for (const auto &layer : c.layers) {
        for (const auto &g : layer.gates) {
            sparse_apply(g, state);
        }
    }
    return state;
}

double sparse_probability_one(const SparseState &state, Wire w) {
    double total = 0;
    for (const auto &[k, a] : state) {
        if ((k >> w) & 1) {
            total += std::norm(a);
        }
    }
    return total;
}

VerifyResult verify_clean(const Circuit &c, const ReferenceOp &op, const VerifyOptions &options) {
    if (op.arity() + c.ancillae > VERIFY_MAX_WIRES) {
        throw std::invalid_argument("verify_clean is limited to " + std::to_string(VERIFY_MAX_WIRES) +
                                    " inputs plus ancillae");
    }
    for (Wire w : op.inputs) {
        if (w >= c.n) {
            throw std::invalid_argument("reference operator input wire " + std::to_string(w) + " is not a data wire");
        }
    }
    if (op.target >= c.n) {
        throw std::invalid_argument("reference operator target is not a data wire");
    }

    VerifyResult result{true, std::nullopt, 0, 0};
    uint64_t num_inputs = uint64_t{1} << c.n;
    for (uint64_t x = 0; x < num_inputs; x++) {
        SparseState out = sparse_run(c, x);
        uint64_t expected = op.apply_to_bits(x);
        Complex hit{0};
        if (auto it = out.find(expected); it != out.end()) {
            hit = it->second;
        }
        Complex phase{1};
        if (!options.strict_phase && std::abs(hit) > 0) {
            phase = hit / std::abs(hit);
        }
        double deviation = std::abs(hit - phase);
        uint64_t worst_other = expected;
        double worst_other_amp = 0;
        for (const auto &[k, a] : out) {
            if (k != expected && std::abs(a) > worst_other_amp) {
                worst_other_amp = std::abs(a);
                worst_other = k;
            }
        }
        deviation = std::max(deviation, worst_other_amp);
        result.max_deviation = std::max(result.max_deviation, deviation);
        result.inputs_checked++;
        if (deviation > VERIFY_TOLERANCE && !result.first_failure) {
            std::stringstream ss;
            ss << "amplitude " << hit.real() << (hit.imag() < 0 ? "" : "+") << hit.imag() << "i on the expected state";
            if (worst_other != expected) {
                ss << ", largest stray amplitude " << worst_other_amp << " on |"
                   << bits_str(worst_other, c.num_wires()) << ">";
            }
            result.ok = false;
            result.first_failure = VerifyFailure{x, expected, deviation, ss.str()};
            if (!options.exhaustive) {
                break;
            }
        }
    }
    return result;
}

std::vector<Wire> sensitivity_scan(const Circuit &c, MeasurementSpec m) {
    if (c.num_wires() > SCAN_MAX_WIRES) {
        throw std::invalid_argument("sensitivity_scan is limited to " + std::to_string(SCAN_MAX_WIRES) + " wires");
    }
    uint64_t num_inputs = uint64_t{1} << c.n;
    std::vector<double> p1(num_inputs);
    for (uint64_t x = 0; x < num_inputs; x++) {
        p1[x] = sparse_probability_one(sparse_run(c, x), m.wire);
    }
    std::vector<Wire> out;
    for (Wire w = 0; w < c.n; w++) {
        uint64_t bit = uint64_t{1} << w;
        for (uint64_t x = 0; x < num_inputs; x++) {
            if (!(x & bit) && std::abs(p1[x] - p1[x | bit]) > VERIFY_TOLERANCE) {
                out.push_back(w);
                break;
            }
        }
    }
    return out;
}

std::string describe(const VerifyResult &r, const Circuit &c) {
    std::stringstream ss;
    ss << (r.ok ? "ok" : "FAIL") << ": " << r.inputs_checked << " basis inputs checked, max deviation "
       << r.max_deviation << "\n";
    if (r.first_failure) {
        const auto &f = *r.first_failure;
        ss << "first failure: input |" << bits_str(f.input, c.num_wires()) << "> expected |"
           << bits_str(f.expected, c.num_wires()) << ">, observed " << f.observed << " (deviation " << f.deviation
           << ")\n";
    }
    return ss.str();
}

}  // namespace shallowq
