// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtele/bases.hpp"
#include "qtele/random.hpp"
#include "qtele/statevector.hpp"

namespace qtele {

/// Local correction the receiver applies: one Pauli factor per receiver
/// qubit (ascending wire order) and a free global phase, chosen so that
/// global_phase * word |post-measurement state> equals the target exactly.
struct CorrectionOp {
    std::vector<Pauli> factors;
    Complex global_phase{1, 0};

    std::string word() const;  // e.g. "ZX"; identity factors print as I
    bool same_word(const CorrectionOp& other) const;
};

StateVector apply_pauli_word(const StateVector& s, const PauliWord& w);

struct OutcomeRecord {
    std::string outcome_label;
    double probability = 0;
    bool is_null = false;
    std::optional<StateVector> bob_state;  // normalized conditional
    std::optional<CorrectionOp> correction;
    double post_fidelity = 0;
};

struct PreOp {
    std::string gate;  // "cnot", "h", "x", "y", "z" or "custom"
    Matrix matrix;
    std::vector<int> targets;
};

/// A teleportation scenario: sender holds the unknown qubits (labels
/// 1..unknown_arity) plus her carrier share; the receiver holds the rest.
/// The measurement basis lives on the sender's qubits in wiring order.
struct Protocol {
    std::string name;
    int unknown_arity = 1;
    std::string carrier_label;
    StateVector carrier{1};
    QubitWiring wiring;
    BasisSet measurement_basis;
    std::vector<PreOp> pre_ops;
    // Computational kets spanning the admissible unknown inputs; empty
    // means the full space.
    std::vector<std::string> input_subspace;
    bool expect_failure = false;

    void validate() const;
    StateVector random_unknown(Rng& rng) const;
};

/// Joint state |unknown> (x) |carrier| with any pre-measurement operations
/// applied.
StateVector compose(const StateVector& unknown, const Protocol& protocol);

/// Projects the sender's qubits onto each basis member; returns the
/// receiver's conditional amplitude vector and probability per member.
/// Requires a complete basis.
std::vector<OutcomeRecord> decompose(const StateVector& joint,
                                     const BasisSet& basis,
                                     const std::vector<int>& alice_qubits);

/// Exhaustive search over the 4^k Pauli words (lexicographic I<X<Y<Z per
/// qubit, first hit wins) for one mapping `bob` onto `target` up to global
/// phase. Empty result signals that no local correction exists.
std::optional<CorrectionOp> find_correction(const StateVector& bob,
                                            const StateVector& target);

struct ProtocolReport {
    std::string protocol_name;
    std::string carrier_label;
    std::string basis_name;
    // restricted input span, when the protocol carries one; corrections are
    // only claimed on this span
    std::vector<std::string> input_subspace;
    std::uint64_t seed = 0;
    int n_inputs = 0;
    std::vector<OutcomeRecord> outcomes;  // from the first input
    int null_outcome_count = 0;
    bool success = false;
    int distinct_corrections = 0;
    double min_post_fidelity = 1.0;
    double max_probability_spread = 0.0;  // max |p - 1/2^k| over live outcomes
    bool corrections_input_independent = true;
};

/// Runs the protocol on one input.
ProtocolReport run(const Protocol& protocol, const StateVector& unknown);

/// Runs over `n_inputs` seeded random unknowns. Corrections are discovered
/// on the first input and re-verified on every subsequent one, so the
/// report certifies an input-independent correction map.
ProtocolReport run_random(const Protocol& protocol, int n_inputs,
                          std::uint64_t seed);

struct FailureStats {
    int null_count = 0;
    double success_probability = 0;  // mean mass on correctable outcomes
};

FailureStats failure_analysis(const Protocol& protocol, int n_samples,
                              std::uint64_t seed);

/// The bundled protocol configurations, by name:
///   single_ghz_chi, single_ghz_varphi, epr_ghz_varphi, single_varphi_ghz,
///   two_qubit_phi4, two_qubit_varphi4, single_ghz_ghz (expected failure).
Protocol builtin_protocol(std::string_view name);
std::vector<std::string> builtin_protocol_names();

Protocol protocol_from_json_text(const std::string& text);
std::string protocol_to_json_text(const Protocol& protocol);

std::string report_to_json_text(const ProtocolReport& report);
std::string report_to_table_text(const ProtocolReport& report);

}  // namespace qtele
