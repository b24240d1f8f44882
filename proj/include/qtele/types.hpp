// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qtele {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Tolerances used throughout. All catalog states are sums of powers of
// 1/sqrt(2), so double precision leaves ample headroom.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kFidelityTol = 1e-10;
inline constexpr double kEigenvalueTol = 1e-10;
inline constexpr double kNonzeroThreshold = 1e-9;
inline constexpr double kNullProbability = 1e-12;

// Dense simulation cap. The largest object handled here is 8 qubits; the
// cap leaves room for generalization spot checks and benchmarks.
inline constexpr int kMaxQubits = 16;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
const Matrix& pauli_matrix(Pauli p);

// Product of single-qubit Pauli factors, keyed by 1-based qubit label.
// Unmapped qubits act as identity.
class PauliWord {
  public:
    PauliWord() = default;
    PauliWord(std::initializer_list<std::pair<const int, Pauli>> init);

    static PauliWord single(int qubit, Pauli p);

    void set(int qubit, Pauli p);
    Pauli at(int qubit) const;
    const std::map<int, Pauli>& factors() const { return factors_; }
    int max_qubit() const;
    bool is_identity() const { return factors_.empty(); }

    // e.g. "X1 Y3"; identity renders as "I".
    std::string str() const;

  private:
    std::map<int, Pauli> factors_;  // non-identity factors only
};

}  // namespace qtele
