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

#ifndef SHALLOWQ_CIRCUIT_IO_H
#define SHALLOWQ_CIRCUIT_IO_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shallowq/circuit.h"

namespace shallowq {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Reads the JSON circuit format:
///
///     {"n": int, "ancillae": int, "target": int, "layers": [[gate, ...], ...]}
///
/// with layers[0] applied first and gates one of
///
///     {"kind": "u", "wire": q, "matrix": [[[re, im], [re, im]], [[re, im], [re, im]]]}
///     {"kind": "z", "wires": [q, ...]}
///     {"kind": "toffoli", "controls": [q, ...], "target": q}
///     {"kind": "cnot", "control": q, "target": q}
///
/// Throws ParseError on malformed documents, unknown gate kinds and wire indices
/// outside [0, n + ancillae). Other structural problems (overlapping supports,
/// non-unitary matrices) are left to validate().
Circuit parse_circuit(std::string_view text);

/// parse_circuit followed by require_valid.
Circuit load_circuit(std::string_view text);

/// Canonical text form: fixed field order, one layer per line, doubles printed
/// in shortest round-trip form.
std::string serialize_circuit(const Circuit &c);

/// FNV-1a 64 of serialize_circuit(c), as "fnv1a64:<16 hex digits>".
std::string circuit_hash(const Circuit &c);

}  // namespace shallowq

#endif
