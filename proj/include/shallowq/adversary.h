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

#ifndef SHALLOWQ_ADVERSARY_H
#define SHALLOWQ_ADVERSARY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shallowq/circuit.h"
#include "shallowq/constructions.h"
#include "shallowq/simulator.h"
#include "shallowq/state.h"

namespace shallowq {

// The gate-killing adversary.
//
// Works on circuits of single-qubit gates and Z-gates (rewrite Toffolis
// first). Layers are walked from the output backwards. After processing k of
// them we hold a committed wire set K and a state psi over K such that, for
// every state |R> over the remaining wires, running the last k layers on
// |R> (x) psi leaves the target at 0. A Z-gate with wires on both sides is
// "killed": one of its wires is pinned to |0> so it acts as the identity.
//
// In basic mode every straddling Z-gate recruits one remaining wire into K,
// pinned to |0>. Improved mode first lets a gate be killed for free when one of
// its committed wires is already |0> in psi (the wire factors out of psi as
// |0>); only the others recruit.

enum class KillMode { basic, improved };

std::string kill_mode_name(KillMode mode);
KillMode parse_kill_mode(const std::string &name);

enum class KillReason {
    /// A remaining wire was moved into K and pinned to |0>.
    recruited,
    /// A committed wire was already |0> in psi.
    pinned_zero,
};

struct KilledGate {
    /// Layer counted from the output (1 = output layer).
    size_t k;
    /// Index into Circuit::layers and into that layer's gates.
    size_t layer_index;
    size_t gate_index;
    /// The |0> wire that makes the gate act as the identity.
    Wire witness;
    KillReason reason;

    bool operator==(const KilledGate &) const = default;
};

/// Snapshot after handling one layer.
struct KillRecord {
    size_t k;
    std::vector<Wire> committed;
    std::vector<Wire> recruited;
    std::vector<KilledGate> killed;

    bool operator==(const KillRecord &) const = default;
};

struct KillState {
    size_t k = 0;
    KillMode mode = KillMode::improved;
    /// K: sorted, always equal to psi.wires.
    std::vector<Wire> committed;
    /// R: the complement of K among all wires.
    std::vector<Wire> remaining;
    PartialState psi;
    /// Wires added to K at step k and pinned to |0>.
    std::vector<Wire> fresh_zero;
    std::vector<KilledGate> killed;
    std::vector<KillRecord> history;

    bool is_killed(size_t layer_index, size_t gate_index) const;
};

/// Largest |K_k| allowed after k layers: (a+1) 2^k in basic mode and
/// (a+1) 2^ceil(k/2) in improved mode.
size_t kill_size_bound(KillMode mode, size_t ancillae, size_t k);

/// Handles the output layer. K is the target plus every ancilla; a wire fed by a
/// single-qubit gate S gets the factor S^dagger|0>, every other committed wire
/// gets |0> (killing the Z-gate on it, if any).
///
/// Throws std::invalid_argument for Toffoli/CNOT gates or depth 0.
KillState kill_base(const Circuit &c, KillMode mode);

/// Handles the next layer back from the output. Throws InvariantBreach if the
/// size bound or the K/R partition breaks, std::out_of_range past the input.
KillState kill_step(KillState s, const Circuit &c);

/// kill_base then kill_step until every layer is handled.
KillState kill_run(const Circuit &c, KillMode mode);

struct KillVerification {
    bool ok;
    /// Target |1> probabilities with killed gates skipped, one per |R> tried
    /// (the all-zeros |R> comes first).
    std::vector<double> readings;
    /// Largest amplitude difference between the skipped-gate and full runs.
    double max_kill_deviation;
    /// Largest |1> probability seen on a witness wire when its gate was skipped.
    double max_witness_p1;
    std::string failure;
};

/// Runs the last s.k layers on |R> (x) psi for the all-zeros |R> and `trials`
/// random |R>, twice: once skipping the killed gates (after checking that each
/// witness wire reads 0 at that point), once with every gate. Passes iff all
/// skipped-gate runs leave the target at p1 <= 1e-9 and both runs agree within
/// 1e-10.
KillVerification verify_kill(const Circuit &c, const KillState &s, size_t trials, uint64_t seed = 0);

enum class Verdict {
    not_parity,
    not_fanout,
    /// The witness state is not |0> on the ancillae, so the refutation only
    /// covers the circuit's action outside clean inputs.
    not_parity_restricted,
    not_fanout_restricted,
    inconclusive,
};

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string &name);
bool is_refutation(Verdict v);

struct CertificateReadings {
    /// Circuit target |1> probability on |0...0>_R (x) psi and with the free
    /// input flipped.
    double circuit_zero;
    double circuit_flipped;
    /// Same for the reference parity operator.
    double reference_zero;
    double reference_flipped;

    bool operator==(const CertificateReadings &) const = default;
};

struct KillCertificate {
    std::string version;
    /// Hash of the circuit that was analysed (the Hadamard conjugate for fanout).
    std::string circuit_hash;
    /// "none" or "hadamard-conjugate".
    std::string transform;
    KillMode mode;
    ReferenceKind against;
    size_t n;
    size_t ancillae;
    Wire target;
    std::vector<KillRecord> history;
    PartialState psi_final;
    std::optional<Wire> free_input;
    std::optional<CertificateReadings> readings;
    bool ancilla_consistency;
    Verdict verdict;

    bool operator==(const KillCertificate &) const = default;
};

/// Runs the adversary and, if a data input stays outside K_d, simulates the whole
/// circuit on |0..0>_R (x) psi and on the same with the least free input flipped.
/// Both target readings must be 0 (else InvariantBreach); the reference parity
/// operator flips its answer between them, so the circuit is not parity.
KillCertificate parity_certificate(const Circuit &c, KillMode mode);

/// Certifies the Hadamard conjugate of c against parity; a refutation there
/// means c does not compute fanout.
KillCertificate fanout_certificate(const Circuit &c, KillMode mode);

/// The circuit a certificate talks about: c itself, or its conjugate.
Circuit certified_circuit(const Circuit &c, const KillCertificate &cert);

struct CertificateCheck {
    bool ok;
    std::string failure;
};

/// Independent re-check of a certificate against the original circuit: hash,
/// free input outside K_d, fresh simulation of both test inputs, reference
/// readings.
CertificateCheck recheck_certificate(const Circuit &c, const KillCertificate &cert);

/// Certificate file format (JSON). Serialization is canonical and parsing then
/// serializing reproduces the same bytes.
std::string serialize_certificate(const KillCertificate &cert);
KillCertificate parse_certificate(std::string_view text);

/// Clean computation that also ignores the ancillae's starting values: for every
/// ancilla basis setting y and data basis input x, c|x, y> equals op|x> (x) |y>
/// up to a phase. Limited to n + ancillae <= 10.
bool robust_check(const Circuit &c, const ReferenceOp &against);

}  // namespace shallowq

#endif
