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

#include "shallowq/circuit_io.h"

#include <cstdio>

#include "json.hpp"

namespace shallowq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json &field(const json &obj, const char *name, const std::string &where) {
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw ParseError(where + ": missing field '" + name + "'");
    }
    return *it;
}

uint64_t read_count(const json &v, const std::string &what) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0) {
        throw ParseError(what + " must be a non-negative integer");
    }
    return v.get<uint64_t>();
}

Wire read_wire(const json &v, size_t num_wires, const std::string &where) {
    uint64_t w = read_count(v, where + ": wire index");
    if (w >= num_wires) {
        throw ParseError(where + ": wire index " + std::to_string(w) + " out of range (" + std::to_string(num_wires) +
                         " wires)");
    }
    return static_cast<Wire>(w);
}

std::vector<Wire> read_wires(const json &v, size_t num_wires, const std::string &where) {
    if (!v.is_array()) {
        throw ParseError(where + ": expected an array of wire indices");
    }
    std::vector<Wire> out;
    for (const auto &e : v) {
        out.push_back(read_wire(e, num_wires, where));
    }
    return out;
}

Complex read_complex(const json &v, const std::string &where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError(where + ": matrix entries must be [re, im] pairs");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

Gate read_gate(const json &g, size_t num_wires, const std::string &where) {
    if (!g.is_object()) {
        throw ParseError(where + ": gate must be an object");
    }
    const auto &kind_v = field(g, "kind", where);
    if (!kind_v.is_string()) {
        throw ParseError(where + ": gate kind must be a string");
    }
    auto kind = kind_v.get<std::string>();
    if (kind == "u") {
        Wire w = read_wire(field(g, "wire", where), num_wires, where);
        const auto &m = field(g, "matrix", where);
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
            m[1].size() != 2) {
            throw ParseError(where + ": matrix must be 2x2");
        }
        Matrix2 u{read_complex(m[0][0], where), read_complex(m[0][1], where), read_complex(m[1][0], where),
                  read_complex(m[1][1], where)};
        return gate_u(w, u);
    }
    if (kind == "z") {
        return gate_z(read_wires(field(g, "wires", where), num_wires, where));
    }
    if (kind == "toffoli") {
        auto controls = read_wires(field(g, "controls", where), num_wires, where);
        return gate_toffoli(std::move(controls), read_wire(field(g, "target", where), num_wires, where));
    }
    if (kind == "cnot") {
        Wire c = read_wire(field(g, "control", where), num_wires, where);
        return gate_cnot(c, read_wire(field(g, "target", where), num_wires, where));
    }
    throw ParseError(where + ": unknown gate kind '" + kind + "'");
}

ordered_json complex_json(Complex z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json gate_json(const Gate &g) {
    ordered_json out;
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
        out["kind"] = "u";
        out["wire"] = s->wire;
        out["matrix"] = ordered_json::array({
            ordered_json::array({complex_json(s->u[0]), complex_json(s->u[1])}),
            ordered_json::array({complex_json(s->u[2]), complex_json(s->u[3])}),
        });
    } else if (const auto *z = std::get_if<ZGate>(&g)) {
        out["kind"] = "z";
        out["wires"] = z->wires;
    } else if (const auto *t = std::get_if<ToffoliGate>(&g)) {
        out["kind"] = "toffoli";
        out["controls"] = t->controls;
        out["target"] = t->target;
    } else {
        const auto &c = std::get<CnotGate>(g);
        out["kind"] = "cnot";
        out["control"] = c.control;
        out["target"] = c.target;
    }
    return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed circuit document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("circuit document must be a JSON object");
    }
    Circuit c;
    c.n = read_count(field(doc, "n", "circuit"), "n");
    c.ancillae = read_count(field(doc, "ancillae", "circuit"), "ancillae");
    if (c.num_wires() > 63) {
        throw ParseError("circuits are limited to 63 wires");
    }
    c.target = read_wire(field(doc, "target", "circuit"), c.num_wires(), "target");
    const auto &layers = field(doc, "layers", "circuit");
    if (!layers.is_array()) {
        throw ParseError("layers must be an array");
    }
    for (size_t li = 0; li < layers.size(); li++) {
        if (!layers[li].is_array()) {
            throw ParseError("layer " + std::to_string(li) + " must be an array of gates");
        }
        Layer layer;
        for (size_t gi = 0; gi < layers[li].size(); gi++) {
            layer.gates.push_back(read_gate(layers[li][gi], c.num_wires(),
                                            "layer " + std::to_string(li) + " gate " + std::to_string(gi)));
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}

Circuit load_circuit(std::string_view text) {
    Circuit c = parse_circuit(text);
    auto v = validate(c);
    if (!v.empty()) {
        throw ParseError("invalid circuit: " + describe(v));
    }
    return c;
}

std::string serialize_circuit(const Circuit &c) {
    std::string out = "{\"n\": " + std::to_string(c.n) + ", \"ancillae\": " + std::to_string(c.ancillae) +
                      ", \"target\": " + std::to_string(c.target) + ", \"layers\": [";
    for (size_t li = 0; li < c.layers.size(); li++) {
        out += li ? ",\n  [" : "\n  [";
        const auto &gates = c.layers[li].gates;
        for (size_t gi = 0; gi < gates.size(); gi++) {
            if (gi) {
                out += ", ";
            }
            out += gate_json(gates[gi]).dump();
        }
        out += "]";
    }
    out += c.layers.empty() ? "]}\n" : "\n]}\n";
    return out;
}

std::string circuit_hash(const Circuit &c) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize_circuit(c)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace shallowq
