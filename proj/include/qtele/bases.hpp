// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtele/statevector.hpp"

namespace qtele {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

BellKind bell_kind_from(std::string_view name);  // "phi+", "phi-", "psi+", "psi-"
std::string bell_kind_name(BellKind kind);

/// Named, ordered family of orthonormal states.
struct BasisSet {
    std::string name;
    int n_qubits = 0;
    std::vector<std::pair<std::string, StateVector>> members;

    std::size_t size() const { return members.size(); }
    const StateVector& member(std::size_t k) const { return members.at(k).second; }
    const StateVector& member(std::string_view label) const;
    bool is_complete() const;

    Matrix gram() const;
    double max_gram_offdiag() const;
    double max_norm_error() const;
    void require_orthonormal(double tol = kAlgebraTol) const;

    // Sum over members of |m><m| compared against the identity.
    double completeness_error() const;
};

/// The two-qubit maximally entangled pairs. `particles` names the two wires
/// in construction order (a permutation of {1,2}).
StateVector bell_pair(BellKind kind, const std::vector<int>& particles = {1, 2});

/// Complete set of the eight three-qubit cat states, paired as
/// (000 +- 111), (010 +- 101), (011 +- 100), (001 +- 110).
BasisSet ghz_basis(const std::vector<int>& particles = {1, 2, 3});

/// Three-qubit families built by sandwiching Bell pairs with a single qubit:
///  - chi:       Bell(12) x single(3)
///  - varphi:    single(1) x Bell(23)
///  - chi_prime: Bell(13) x single(2)
/// Each is a complete 8-member orthonormal basis.
BasisSet chi_basis(const std::vector<int>& particles = {1, 2, 3});
BasisSet varphi_basis(const std::vector<int>& particles = {1, 2, 3});
BasisSet chi_prime_basis(const std::vector<int>& particles = {1, 2, 3});

enum class FourQubitFamily {
    First,        // outer singles on (1,4) around Bell(23)
    Second,       // three-qubit cat states x single(4)
    SecondAlt,    // same family re-expressed with Bell(24) between singles (1,3)
    Variant,      // cat x single(4) with the alternate pairing
    BellProduct,  // Bell(14) x Bell(23) products; no genuine 4-party correlation
    YeoChua,      // Yeo-Chua states: local-Pauli orbit of a generator
};

std::string four_qubit_family_name(FourQubitFamily family);
std::optional<FourQubitFamily> four_qubit_family_from(std::string_view name);

/// Complete 16-member orthonormal four-qubit sets.
BasisSet four_particle_set(FourQubitFamily family,
                           const std::vector<int>& particles = {1, 2, 3, 4});

/// Product states that carry no genuine multi-particle correlation, with
/// their factorizations recorded. Factor k lives on `factor_particles[k]`.
struct SeparableExample {
    std::string label;
    StateVector state{1};
    std::vector<std::vector<int>> factor_particles;
    std::vector<StateVector> factors;

    // Tensor of the factors, rewired onto the full register.
    StateVector product() const;
};

std::vector<SeparableExample> separable_examples();

/// Recursive 2N-qubit family: the (2N-2)-qubit members are sandwiched
/// between two fresh outer qubits, pairing inner member 2j-1 with outer
/// |0..0> and inner member 2j with outer |1..1>. N=2 yields the First
/// four-qubit set; every level emits the 16 members the recursion produces
/// (a complete basis only at N=2).
BasisSet generalized_basis(int n_pairs);

/// For each member of `a`, the member of `b` equal to it up to a global
/// phase. Throws if the sets do not match one-to-one.
struct PhaseMatch {
    std::size_t index_in_b;
    Complex phase;  // member_a = phase * member_b
};
std::vector<PhaseMatch> match_up_to_phase(const BasisSet& a, const BasisSet& b,
                                          double tol = 1e-9);

/// Catalog lookup: "chi.1", "ghz.5", "bell.psi+", "phi4.7", "product3", ...
const StateVector& catalog_state(std::string_view label);
std::vector<std::string> catalog_labels();
BasisSet basis_by_name(std::string_view family);
std::vector<std::string> basis_family_names();

}  // namespace qtele
