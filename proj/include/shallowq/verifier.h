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

#ifndef SHALLOWQ_VERIFIER_H
#define SHALLOWQ_VERIFIER_H

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "shallowq/circuit.h"
#include "shallowq/constructions.h"

namespace shallowq {

// Brute-force ground truth. Everything here runs on its own sparse
// basis-state simulator so that it never shares a code path with the dense
// engine in simulator.h.

/// Amplitudes keyed by global basis bits (bit w = wire w).
using SparseState = std::unordered_map<uint64_t, Complex>;

SparseState sparse_run(const Circuit &c, uint64_t input_bits);
SparseState sparse_run(const Circuit &c, SparseState state);
double sparse_probability_one(const SparseState &state, Wire w);

constexpr double VERIFY_TOLERANCE = 1e-9;
/// Limit on reference arity + ancillae for basis-by-basis checks.
constexpr size_t VERIFY_MAX_WIRES = 16;
constexpr size_t SCAN_MAX_WIRES = 10;

struct VerifyFailure {
    uint64_t input;
    uint64_t expected;
    /// Largest amplitude deviation from the expected basis state.
    double deviation;
    std::string observed;
};

struct VerifyResult {
    bool ok;
    std::optional<VerifyFailure> first_failure;
    double max_deviation;
    size_t inputs_checked;
};

struct VerifyOptions {
    /// Compare amplitudes literally instead of up to a per-input global phase.
    bool strict_phase = false;
    /// Keep going after the first failure (max_deviation then covers all inputs).
    bool exhaustive = false;
};

/// Checks that c maps |x, 0^a> to (op|x>) (x) |0^a> for every basis x over the
/// data wires, up to a phase per input unless strict_phase is set.
VerifyResult verify_clean(const Circuit &c, const ReferenceOp &op, const VerifyOptions &options = {});

/// Data wires whose flip changes the measured |1> probability by more than 1e-9
/// on some basis input (ancillae 0). Limited to 10 wires.
std::vector<Wire> sensitivity_scan(const Circuit &c, MeasurementSpec m);

/// Renders a verify result as plain text.
std::string describe(const VerifyResult &r, const Circuit &c);

}  // namespace shallowq

#endif
