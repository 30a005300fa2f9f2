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

#include "shallowq/state.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shallowq {

namespace {

void normalize_wires(std::vector<Wire> &wires) {
    std::sort(wires.begin(), wires.end());
    if (std::adjacent_find(wires.begin(), wires.end()) != wires.end()) {
        throw std::invalid_argument("state wires must be distinct");
    }
    if (wires.size() > MAX_STATE_WIRES) {
        throw std::invalid_argument("state over " + std::to_string(wires.size()) + " wires is too large");
    }
}

}  // namespace

PartialState PartialState::zeros(std::vector<Wire> wires) {
    return basis(std::move(wires), 0);
}

PartialState PartialState::basis(std::vector<Wire> wires, uint64_t global_bits) {
    normalize_wires(wires);
    PartialState s{std::move(wires), {}};
    s.amps.assign(size_t{1} << s.wires.size(), Complex{0});
    s.amps[s.local_index(global_bits)] = 1;
    return s;
}

PartialState PartialState::single(Wire w, Complex a0, Complex a1) {
    return PartialState{{w}, {a0, a1}};
}

PartialState PartialState::random(std::vector<Wire> wires, std::mt19937_64 &rng) {
    normalize_wires(wires);
    PartialState s{std::move(wires), {}};
    std::normal_distribution<double> normal;
    s.amps.resize(size_t{1} << s.wires.size());
    double total = 0;
    for (auto &a : s.amps) {
        double re = normal(rng);
        double im = normal(rng);
        a = {re, im};
        total += re * re + im * im;
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : s.amps) {
        a *= scale;
    }
    return s;
}

std::optional<size_t> PartialState::position_of(Wire w) const {
    auto it = std::lower_bound(wires.begin(), wires.end(), w);
    if (it == wires.end() || *it != w) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - wires.begin());
}

uint64_t PartialState::local_index(uint64_t bits) const {
    uint64_t out = 0;
    for (size_t q = 0; q < wires.size(); q++) {
        out |= ((bits >> wires[q]) & 1) << q;
    }
    return out;
}

uint64_t PartialState::global_bits(uint64_t index) const {
    uint64_t out = 0;
    for (size_t q = 0; q < wires.size(); q++) {
        out |= ((index >> q) & 1) << wires[q];
    }
    return out;
}

double PartialState::norm() const {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

double PartialState::probability_one(Wire w) const {
    auto q = position_of(w);
    if (!q) {
        throw std::invalid_argument("wire " + std::to_string(w) + " is not part of the state");
    }
    uint64_t bit = uint64_t{1} << *q;
    double total = 0;
    for (uint64_t k = 0; k < amps.size(); k++) {
        if (k & bit) {
            total += std::norm(amps[k]);
        }
    }
    return total;
}

PartialState tensor(const PartialState &a, const PartialState &b) {
    PartialState out;
    out.wires = wire_union(a.wires, b.wires);
    if (out.wires.size() != a.wires.size() + b.wires.size()) {
        throw std::invalid_argument("tensor product of states over overlapping wires");
    }
    if (out.wires.size() > MAX_STATE_WIRES) {
        throw std::invalid_argument("tensor product too large");
    }
    out.amps.assign(size_t{1} << out.wires.size(), Complex{0});
    for (uint64_t i = 0; i < a.amps.size(); i++) {
        if (a.amps[i] == Complex{0}) {
            continue;
        }
        uint64_t ga = a.global_bits(i);
        for (uint64_t j = 0; j < b.amps.size(); j++) {
            out.amps[out.local_index(ga | b.global_bits(j))] = a.amps[i] * b.amps[j];
        }
    }
    return out;
}

double max_amplitude_diff(const PartialState &a, const PartialState &b) {
    if (a.wires != b.wires) {
        throw std::invalid_argument("comparing states over different wires");
    }
    double worst = 0;
    for (size_t k = 0; k < a.amps.size(); k++) {
        worst = std::max(worst, std::abs(a.amps[k] - b.amps[k]));
    }
    return worst;
}

std::vector<Wire> wire_union(std::span<const Wire> a, std::span<const Wire> b) {
    std::vector<Wire> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Wire> wire_difference(std::span<const Wire> a, std::span<const Wire> b) {
    std::vector<Wire> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool wire_subset(std::span<const Wire> a, std::span<const Wire> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Wire> wire_range(Wire begin, Wire end) {
    std::vector<Wire> out;
    for (Wire w = begin; w < end; w++) {
        out.push_back(w);
    }
    return out;
}

}  // namespace shallowq
