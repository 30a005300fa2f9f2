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

#include "shallowq/circuit.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace shallowq {

namespace {

void check_gate(const Gate &g, size_t num_wires, size_t layer, size_t index, std::vector<Violation> &out) {
    auto add = [&](const std::string &msg) {
        out.push_back(Violation{layer, index, msg + " in layer " + std::to_string(layer) + ", gate " +
                                                  std::to_string(index) + " (" + gate_str(g) + ")"});
    };

    auto support = gate_support(g);
    if (support.empty()) {
        add("empty wire set");
    }
    for (Wire w : support) {
        if (w >= num_wires) {
            add("wire " + std::to_string(w) + " out of range");
        }
    }
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
        if (const auto *t = std::get_if<ToffoliGate>(&g);
            t != nullptr && std::binary_search(t->controls.begin(), t->controls.end(), t->target)) {
            add("toffoli target among its controls");
        } else if (const auto *c = std::get_if<CnotGate>(&g); c != nullptr && c->control == c->target) {
            add("cnot control equals target");
        } else {
            add("duplicate wire");
        }
    }
    if (const auto *s = std::get_if<SingleQubitGate>(&g); s != nullptr && !is_unitary(s->u)) {
        std::stringstream ss;
        ss << "non-unitary matrix (error " << unitarity_error(s->u) << ")";
        add(ss.str());
    }
}

}  // namespace

std::vector<Violation> validate(const Circuit &c) {
    std::vector<Violation> out;
    if (c.target >= c.num_wires()) {
        out.push_back(Violation{std::nullopt, std::nullopt,
                                "target wire " + std::to_string(c.target) + " out of range (" +
                                    std::to_string(c.num_wires()) + " wires)"});
    }
    for (size_t li = 0; li < c.layers.size(); li++) {
        std::map<Wire, size_t> owner;
        const auto &gates = c.layers[li].gates;
        for (size_t gi = 0; gi < gates.size(); gi++) {
            check_gate(gates[gi], c.num_wires(), li, gi, out);
            auto support = gate_support(gates[gi]);
            support.erase(std::unique(support.begin(), support.end()), support.end());
            for (Wire w : support) {
                auto [it, inserted] = owner.emplace(w, gi);
                if (!inserted) {
                    out.push_back(Violation{li, gi,
                                            "overlapping supports in layer " + std::to_string(li) + " (wire " +
                                                std::to_string(w) + " used by gates " + std::to_string(it->second) +
                                                " and " + std::to_string(gi) + ")"});
                }
            }
        }
    }
    return out;
}

bool is_valid(const Circuit &c) {
    return validate(c).empty();
}

std::string describe(const std::vector<Violation> &violations) {
    std::stringstream ss;
    for (size_t k = 0; k < violations.size(); k++) {
        if (k) {
            ss << "; ";
        }
        ss << violations[k].message;
    }
    return ss.str();
}

void require_valid(const Circuit &c) {
    auto v = validate(c);
    if (!v.empty()) {
        throw std::invalid_argument("invalid circuit: " + describe(v));
    }
}

size_t max_arity(const Circuit &c) {
    size_t k = 1;
    for (const auto &layer : c.layers) {
        for (const auto &g : layer.gates) {
            k = std::max(k, gate_arity(g));
        }
    }
    return k;
}

bool only_single_qubit_and_z(const Circuit &c) {
    for (const auto &layer : c.layers) {
        for (const auto &g : layer.gates) {
            if (is_permutation_gate(g)) {
                return false;
            }
        }
    }
    return true;
}

Circuit rewrite_toffoli_to_z(const Circuit &c) {
    Circuit out{c.n, c.ancillae, c.target, {}};
    for (const auto &layer : c.layers) {
        Layer before;
        Layer middle;
        for (const auto &g : layer.gates) {
            if (const auto *t = std::get_if<ToffoliGate>(&g)) {
                before.gates.push_back(gate_h(t->target));
                std::vector<Wire> wires = t->controls;
                wires.push_back(t->target);
                middle.gates.push_back(gate_z(std::move(wires)));
            } else if (const auto *cx = std::get_if<CnotGate>(&g)) {
                before.gates.push_back(gate_h(cx->target));
                middle.gates.push_back(gate_z({cx->control, cx->target}));
            } else {
                middle.gates.push_back(g);
            }
        }
        if (before.gates.empty()) {
            out.layers.push_back(std::move(middle));
        } else {
            out.layers.push_back(before);
            out.layers.push_back(std::move(middle));
            out.layers.push_back(std::move(before));
        }
    }
    return out;
}

}  // namespace shallowq
