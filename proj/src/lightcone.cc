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

#include <algorithm>
#include <cmath>

namespace shallowq {

namespace {

bool intersects(const std::vector<Wire> &sorted_a, const std::vector<Wire> &sorted_b) {
    auto i = sorted_a.begin();
    auto j = sorted_b.begin();
    while (i != sorted_a.end() && j != sorted_b.end()) {
        if (*i == *j) {
            return true;
        }
        if (*i < *j) {
            i++;
        } else {
            j++;
        }
    }
    return false;
}

TargetReading simulate_reading(const Circuit &c, uint64_t bits, MeasurementSpec m) {
    auto wires = wire_range(0, static_cast<Wire>(c.num_wires()));
    return read_target(run(c, PartialState::basis(wires, bits)), m);
}

TargetReading reference_reading(const Circuit &c, const ReferenceOp &op, uint64_t bits, MeasurementSpec m) {
    auto wires = wire_range(0, static_cast<Wire>(c.num_wires()));
    return read_target(apply_reference(op, PartialState::basis(wires, bits)), m);
}

}  // namespace

LightconeReport lightcone(const Circuit &c, MeasurementSpec m) {
    LightconeReport report;
    report.max_arity = max_arity(c);

    std::vector<Wire> current{m.wire};
    if (c.depth() > 0) {
        for (const auto &g : c.layer_from_output(1).gates) {
            if (gate_touches(g, m.wire)) {
                current = gate_support(g);
            }
        }
    }
    report.sets.push_back(current);
    for (size_t k = 2; k <= c.depth(); k++) {
        std::vector<Wire> next = current;
        for (const auto &g : c.layer_from_output(k).gates) {
            auto support = gate_support(g);
            if (intersects(support, current)) {
                next = wire_union(next, support);
            }
        }
        current = std::move(next);
        report.sets.push_back(current);
    }

    double bound = 1;
    for (size_t i = 0; i < report.sets.size(); i++) {
        bound *= static_cast<double>(report.max_arity);
        report.bound_per_level.push_back(bound);
    }
    for (Wire w = 0; w < c.n; w++) {
        if (!std::binary_search(current.begin(), current.end(), w)) {
            report.free_inputs.push_back(w);
        }
    }
    return report;
}

std::optional<LightconePair> lightcone_counterexample(const Circuit &c, MeasurementSpec m, const ReferenceOp &against) {
    LightconeReport report = lightcone(c, m);
    if (report.free_inputs.empty()) {
        return std::nullopt;
    }
    LightconePair pair{};
    pair.x = 0;
    pair.flipped = report.free_inputs.front();
    uint64_t flipped_bits = pair.x ^ (uint64_t{1} << pair.flipped);
    pair.reading_x = simulate_reading(c, pair.x, m);
    pair.reading_flipped = simulate_reading(c, flipped_bits, m);
    if (std::abs(pair.reading_x.p1 - pair.reading_flipped.p1) > EXACT_ZERO) {
        throw InvariantBreach("wire " + std::to_string(pair.flipped) +
                              " lies outside the lightcone but changes the measured reading");
    }
    pair.reference_x = reference_reading(c, against, pair.x, m);
    pair.reference_flipped = reference_reading(c, against, flipped_bits, m);
    if (std::abs(pair.reference_x.p1 - pair.reference_flipped.p1) < 1 - EXACT_ZERO) {
        return std::nullopt;
    }
    return pair;
}

bool recheck_lightcone_pair(const Circuit &c, MeasurementSpec m, const ReferenceOp &against,
                            const LightconePair &pair) {
    if (pair.flipped >= c.num_wires()) {
        return false;
    }
    uint64_t flipped_bits = pair.x ^ (uint64_t{1} << pair.flipped);
    auto cx = simulate_reading(c, pair.x, m);
    auto cf = simulate_reading(c, flipped_bits, m);
    auto px = reference_reading(c, against, pair.x, m);
    auto pf = reference_reading(c, against, flipped_bits, m);
    return std::abs(cx.p1 - cf.p1) <= EXACT_ZERO && std::abs(px.p1 - pf.p1) >= 1 - EXACT_ZERO;
}

DepthBoundVerdict check_depth_bound(const Circuit &c, ReferenceKind against) {
    Circuit analysed = against == ReferenceKind::fanout ? conjugate_parity_to_fanout(c) : c;
    MeasurementSpec m{c.target};
    ReferenceOp op = ReferenceOp::for_circuit(ReferenceKind::parity, analysed);

    DepthBoundVerdict v{};
    v.against = against;
    v.max_arity = max_arity(c);
    v.effective_depth = analysed.depth();
    v.n = c.n;
    v.bound_triggered = std::pow(static_cast<double>(v.max_arity), static_cast<double>(v.effective_depth)) <
                        static_cast<double>(c.n);
    v.report = lightcone(analysed, m);
    if (v.bound_triggered) {
        v.counterexample = lightcone_counterexample(analysed, m, op);
        v.refuted = v.counterexample.has_value() && recheck_lightcone_pair(analysed, m, op, *v.counterexample);
    }
    return v;
}

}  // namespace shallowq
