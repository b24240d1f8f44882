// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtele/statevector.hpp"

namespace qtele {

/// Which Pauli axis is measured on which particle. Particles are distinct
/// 1-based labels; axes are restricted to {X, Y, Z}.
struct CorrelationSpec {
    std::vector<int> particles;
    std::vector<Pauli> axes;

    static CorrelationSpec parse(const std::vector<int>& particles,
                                 std::string_view axes);
    std::string axes_str() const;
    void validate() const;
};

/// Statistical correlation coefficients: the joint cumulant of the Pauli
/// observables across the listed particles. corr2/corr3/corr4 are the
/// closed forms (2, 5 and 15 moment terms); cumulant_n is the general
/// partition sum over the partition lattice of {1..N}, N <= 8. The two
/// routes are independent and must agree.
double corr2(const StateVector& s, const CorrelationSpec& spec);
double corr3(const StateVector& s, const CorrelationSpec& spec);
double corr4(const StateVector& s, const CorrelationSpec& spec);
double cumulant_n(const StateVector& s, const CorrelationSpec& spec);
double cumulant_n(const DensityMatrix& rho, const CorrelationSpec& spec);

/// Enumerates set partitions of {0..n-1} via restricted growth strings.
/// The callback receives the block assignment (element -> block id) and the
/// number of blocks.
void for_each_partition(
    int n, const std::function<void(const std::vector<int>&, int)>& fn);

struct CorrelationRow {
    std::string state_label;
    std::string particles;  // comma-joined
    std::string axes;       // e.g. "xxz"
    double value = 0;
    bool is_nonzero = false;
};

struct CorrelationTable {
    double threshold = kNonzeroThreshold;
    std::vector<CorrelationRow> rows;

    // nonzero entries as (axes, value), in scan order
    std::vector<std::pair<std::string, double>> nonzero() const;
};

/// Evaluates all 3^N axis words on the given particles and classifies each
/// against the zero threshold. The scan parallelizes over axis words; each
/// word's value is computed independently, so results do not depend on the
/// schedule.
CorrelationTable nonzero_scan(const StateVector& s,
                              const std::vector<int>& particles,
                              std::string_view state_label,
                              double threshold = kNonzeroThreshold);
CorrelationTable nonzero_scan(const DensityMatrix& rho,
                              const std::vector<int>& particles,
                              std::string_view state_label,
                              double threshold = kNonzeroThreshold);

/// Wootters concurrence of a two-qubit mixed state: max(0, l1-l2-l3-l4)
/// where the l's are the decreasing square roots of the eigenvalues of
/// rho * (YY) rho^* (YY).
double concurrence(const DensityMatrix& rho);

}  // namespace qtele
