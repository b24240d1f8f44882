// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtele/statevector.hpp"

namespace qtele {

struct Gate {
    enum class Kind { H, X, Y, Z, Cnot, Custom1, Custom2 };

    Kind kind = Kind::H;
    std::vector<int> targets;  // 1-based; for Cnot: {control, target}
    Matrix matrix;             // customs only
    std::string label;         // customs only, e.g. "cz"

    static Gate h(int q);
    static Gate x(int q);
    static Gate y(int q);
    static Gate z(int q);
    static Gate cnot(int control, int target);
    static Gate custom1(std::string label, Matrix m, int q);
    static Gate custom2(std::string label, Matrix m, int q1, int q2);

    const Matrix& unitary() const;
    std::string name() const;
};

struct Circuit {
    int n_qubits = 1;
    std::vector<Gate> gates;
    std::vector<int> measured;  // computational-basis measurement; empty = none

    void validate() const;
};

StateVector run_circuit(const Circuit& circuit, const StateVector& input);

struct MeasOutcome {
    std::string bits;  // outcome of the measured qubits, in their list order
    double probability = 0;
    std::optional<StateVector> conditional;  // normalized state of the rest
};

/// Projective computational-basis measurement of the listed qubits after
/// running the circuit. Outcomes are enumerated in bitstring order.
std::vector<MeasOutcome> measure_outcomes(const Circuit& circuit,
                                          const StateVector& input,
                                          const std::vector<int>& qubits);

/// Multinomial sampling from the measurement distribution; reproducible by
/// seed. Shots may fan out over threads with per-worker derived streams;
/// the merged counts are deterministic.
std::map<std::string, std::int64_t> sample(const Circuit& circuit,
                                           const StateVector& input,
                                           std::uint64_t seed,
                                           std::int64_t shots);

/// Preparation circuits from |0...0>, by catalog label:
///   "ghz"       -> (|000> + |111>)/sqrt(2)
///   "varphi.1"  -> the Hadamard image of the cat state
///   "phi4.1"    -> first four-qubit family, member 1
///   "varphi4.1" -> second four-qubit family, member 1
Circuit prepare(std::string_view label);
std::vector<std::string> prepare_labels();

/// Measurement networks: basis-change gates that map an entangled
/// measurement onto computational readout, by protocol name:
///   single_ghz (4 wires), epr_ghz (5), single_varphi (4),
///   two_qubit_phi4 (6), two_qubit_varphi4 (6).
Circuit teleport_network(std::string_view name);
std::vector<std::string> teleport_network_names();

Circuit circuit_from_json_text(const std::string& text);
std::string circuit_to_json_text(const Circuit& circuit);

}  // namespace qtele
