// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtele/types.hpp"

namespace qtele {

/// Pure state of an n-qubit register as 2^n complex amplitudes.
///
/// Index convention: the amplitude index reads as a big-endian bitstring
/// whose leftmost bit belongs to qubit 1. So for n = 3 the amplitude at
/// index 5 (binary 101) is the coefficient of |101>, with qubit 1 in |1>,
/// qubit 2 in |0>, qubit 3 in |1>. Qubit labels are 1-based throughout.
class StateVector {
  public:
    explicit StateVector(int n_qubits);  // |0...0>
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    static StateVector basis_ket(std::string_view bits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_.at(index); }

    double norm() const;
    StateVector& normalize();

    // Bit of `index` belonging to `qubit` (1-based label).
    static int bit(std::size_t index, int qubit, int n_qubits) {
        return static_cast<int>((index >> (n_qubits - qubit)) & 1u);
    }

    // Mutable access for in-place construction (bases, kernels).
    std::vector<Complex>& raw() { return amps_; }

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

/// Mixed state on n qubits. Entries use the same index convention as
/// StateVector.
class DensityMatrix {
  public:
    DensityMatrix(int n_qubits, Matrix entries);
    static DensityMatrix projector(const StateVector& s);
    static DensityMatrix maximally_mixed(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }

    // Hermiticity and unit trace within 1e-12, eigenvalues >= -1e-10.
    void validate() const;

  private:
    int n_qubits_;
    Matrix entries_;
};

/// Logical-role wiring of a joint register: which qubits carry the unknown
/// state, which carrier qubits stay with the sender, which go to the
/// receiver. Labels are global 1-based positions and must form a
/// permutation of 1..n with no repeats.
struct QubitWiring {
    std::vector<int> alice_unknown;
    std::vector<int> alice_carrier;
    std::vector<int> bob;

    std::vector<int> alice() const;  // unknown followed by carrier share
    int total() const;
    void validate() const;
};

StateVector tensor(const StateVector& a, const StateVector& b);
Complex inner(const StateVector& a, const StateVector& b);

// Applies `u` on the listed target qubits (1-based, first target = most
// significant bit of u's index). Rejects non-unitary u and bad targets.
StateVector apply_unitary(const StateVector& s, const Matrix& u,
                          const std::vector<int>& targets);

double expectation(const StateVector& s, const PauliWord& w);
double expectation(const DensityMatrix& rho, const PauliWord& w);

// Reduced state on the `keep` qubits (order of `keep` = output qubit order).
DensityMatrix partial_trace(const StateVector& s, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

double fidelity(const StateVector& target, const StateVector& got);
double fidelity(const StateVector& target, const DensityMatrix& got);

// Reorders tensor factors: factor k of `s` (0-based) becomes qubit
// `labels[k]` of the result. `labels` must be a permutation of 1..n.
StateVector permute_qubits(const StateVector& s, const std::vector<int>& labels);

bool is_unitary(const Matrix& u, double tol = kAlgebraTol);

}  // namespace qtele
