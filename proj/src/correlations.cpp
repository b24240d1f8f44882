// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace qtele {

namespace {

constexpr int kMaxCumulantArity = 8;  // Bell(8) = 4140 partitions

// <sigma...> moment on a subset of the spec's particles.
template <typename State>
double moment(const State& s, const CorrelationSpec& spec,
              const std::vector<int>& subset) {
    PauliWord w;
    for (int k : subset) w.set(spec.particles[k], spec.axes[k]);
    return expectation(s, w);
}

template <typename State>
double cumulant_impl(const State& s, const CorrelationSpec& spec) {
    spec.validate();
    const int n = static_cast<int>(spec.particles.size());
    if (n > kMaxCumulantArity)
        throw std::invalid_argument("cumulant_n: arity capped at 8");

    // Moments for every nonempty particle subset, keyed by bitmask.
    std::vector<double> moments(std::size_t{1} << n, 0.0);
    for (std::size_t mask = 1; mask < moments.size(); ++mask) {
        std::vector<int> subset;
        for (int k = 0; k < n; ++k)
            if ((mask >> k) & 1u) subset.push_back(k);
        moments[mask] = moment(s, spec, subset);
    }

    double total = 0;
    for_each_partition(n, [&](const std::vector<int>& block_of, int n_blocks) {
        std::vector<std::size_t> block_mask(static_cast<std::size_t>(n_blocks), 0);
        for (int k = 0; k < n; ++k)
            block_mask[static_cast<std::size_t>(block_of[k])] |= std::size_t{1} << k;
        double prod = 1;
        for (auto mask : block_mask) prod *= moments[mask];
        // (-1)^(b-1) (b-1)!
        double coef = 1;
        for (int b = 1; b < n_blocks; ++b) coef *= -b;
        total += coef * prod;
    });
    return total;
}

template <typename State>
CorrelationTable scan_impl(const State& s, const std::vector<int>& particles,
                           std::string_view state_label, double threshold) {
    const int n = static_cast<int>(particles.size());
    std::size_t n_words = 1;
    for (int k = 0; k < n; ++k) n_words *= 3;

    std::string joined;  // space-separated so the CSV cell stays one field
    for (int p : particles) {
        if (!joined.empty()) joined += ' ';
        joined += std::to_string(p);
    }

    CorrelationTable table;
    table.threshold = threshold;
    table.rows.resize(n_words);

    const Pauli axes_of[3] = {Pauli::X, Pauli::Y, Pauli::Z};
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(n_words); ++w) {
        CorrelationSpec spec;
        spec.particles = particles;
        spec.axes.resize(static_cast<std::size_t>(n));
        std::string axes_str(static_cast<std::size_t>(n), 'x');
        std::size_t rem = static_cast<std::size_t>(w);
        for (int k = n - 1; k >= 0; --k) {
            const auto digit = rem % 3;
            rem /= 3;
            spec.axes[static_cast<std::size_t>(k)] = axes_of[digit];
            axes_str[static_cast<std::size_t>(k)] = "xyz"[digit];
        }
        const double value = cumulant_impl(s, spec);
        auto& row = table.rows[static_cast<std::size_t>(w)];
        row.state_label = state_label;
        row.particles = joined;
        row.axes = axes_str;
        row.value = value;
        row.is_nonzero = std::abs(value) >= threshold;
    }
    return table;
}

}  // namespace

CorrelationSpec CorrelationSpec::parse(const std::vector<int>& particles,
                                       std::string_view axes) {
    CorrelationSpec spec;
    spec.particles = particles;
    for (char c : axes) spec.axes.push_back(pauli_from_char(c));
    spec.validate();
    return spec;
}

std::string CorrelationSpec::axes_str() const {
    std::string out;
    for (Pauli p : axes)
        out += static_cast<char>(std::tolower(pauli_char(p)));
    return out;
}

void CorrelationSpec::validate() const {
    if (particles.size() != axes.size())
        throw std::invalid_argument("CorrelationSpec: particles/axes length mismatch");
    if (particles.empty())
        throw std::invalid_argument("CorrelationSpec: empty");
    std::set<int> seen(particles.begin(), particles.end());
    if (seen.size() != particles.size())
        throw std::invalid_argument("CorrelationSpec: repeated particle label");
    for (Pauli p : axes)
        if (p == Pauli::I)
            throw std::invalid_argument("CorrelationSpec: axes must be x, y or z");
}

namespace {

template <typename State>
double m1(const State& s, const CorrelationSpec& c, int i) {
    return moment(s, c, {i});
}
template <typename State>
double m2(const State& s, const CorrelationSpec& c, int i, int j) {
    return moment(s, c, {i, j});
}
template <typename State>
double m3(const State& s, const CorrelationSpec& c, int i, int j, int k) {
    return moment(s, c, {i, j, k});
}

}  // namespace

double corr2(const StateVector& s, const CorrelationSpec& spec) {
    spec.validate();
    if (spec.particles.size() != 2)
        throw std::invalid_argument("corr2: spec arity must be 2");
    return m2(s, spec, 0, 1) - m1(s, spec, 0) * m1(s, spec, 1);
}

double corr3(const StateVector& s, const CorrelationSpec& spec) {
    spec.validate();
    if (spec.particles.size() != 3)
        throw std::invalid_argument("corr3: spec arity must be 3");
    return moment(s, spec, {0, 1, 2})
         - m1(s, spec, 0) * m2(s, spec, 1, 2)
         - m1(s, spec, 1) * m2(s, spec, 0, 2)
         - m1(s, spec, 2) * m2(s, spec, 0, 1)
         + 2 * m1(s, spec, 0) * m1(s, spec, 1) * m1(s, spec, 2);
}

double corr4(const StateVector& s, const CorrelationSpec& spec) {
    spec.validate();
    if (spec.particles.size() != 4)
        throw std::invalid_argument("corr4: spec arity must be 4");
    const double s1 = m1(s, spec, 0), s2 = m1(s, spec, 1);
    const double s3 = m1(s, spec, 2), s4 = m1(s, spec, 3);
    return moment(s, spec, {0, 1, 2, 3})
         - s1 * m3(s, spec, 1, 2, 3)
         - s2 * m3(s, spec, 0, 2, 3)
         - s3 * m3(s, spec, 0, 1, 3)
         - s4 * m3(s, spec, 0, 1, 2)
         + 2 * s1 * s2 * m2(s, spec, 2, 3)
         + 2 * s1 * s3 * m2(s, spec, 1, 3)
         + 2 * s1 * s4 * m2(s, spec, 1, 2)
         + 2 * s2 * s3 * m2(s, spec, 0, 3)
         + 2 * s2 * s4 * m2(s, spec, 0, 2)
         + 2 * s3 * s4 * m2(s, spec, 0, 1)
         - m2(s, spec, 0, 1) * m2(s, spec, 2, 3)
         - m2(s, spec, 0, 2) * m2(s, spec, 1, 3)
         - m2(s, spec, 0, 3) * m2(s, spec, 1, 2)
         - 6 * s1 * s2 * s3 * s4;
}

double cumulant_n(const StateVector& s, const CorrelationSpec& spec) {
    return cumulant_impl(s, spec);
}

double cumulant_n(const DensityMatrix& rho, const CorrelationSpec& spec) {
    return cumulant_impl(rho, spec);
}

namespace {

// Restricted growth strings: a[0] = 0, a[k] <= 1 + max(a[0..k-1]).
void partition_rec(int k, int n, std::vector<int>& a, int max_so_far,
                   const std::function<void(const std::vector<int>&, int)>& fn) {
    if (k == n) {
        fn(a, max_so_far + 1);
        return;
    }
    for (int b = 0; b <= max_so_far + 1; ++b) {
        a[static_cast<std::size_t>(k)] = b;
        partition_rec(k + 1, n, a, std::max(max_so_far, b), fn);
    }
}

}  // namespace

void for_each_partition(
    int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_partition: n must be >= 1");
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    partition_rec(0, n, a, -1, fn);
}

std::vector<std::pair<std::string, double>> CorrelationTable::nonzero() const {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& row : rows)
        if (row.is_nonzero) out.emplace_back(row.axes, row.value);
    return out;
}

CorrelationTable nonzero_scan(const StateVector& s,
                              const std::vector<int>& particles,
                              std::string_view state_label, double threshold) {
    return scan_impl(s, particles, state_label, threshold);
}

CorrelationTable nonzero_scan(const DensityMatrix& rho,
                              const std::vector<int>& particles,
                              std::string_view state_label, double threshold) {
    return scan_impl(rho, particles, state_label, threshold);
}

double concurrence(const DensityMatrix& rho) {
    if (rho.n_qubits() != 2)
        throw std::invalid_argument("concurrence: needs a 2-qubit state");
    static const Matrix yy = [] {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 3) = -1; m(1, 2) = 1; m(2, 1) = 1; m(3, 0) = -1;
        return m;
    }();
    // The spin-flip spectrum lambda_i is the set of singular values of
    // sqrt(rho) (YY) sqrt(rho)^*: squaring that matrix against its adjoint
    // gives sqrt(rho) rhotilde sqrt(rho). Unlike the eigenvalues of
    // rho * rhotilde, the singular values of the rank-deficient product do
    // not suffer sqrt amplification of rounding noise near zero.
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
    Matrix sqrt_rho = Matrix::Zero(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        const double ev = std::max(0.0, es.eigenvalues()(i));
        sqrt_rho += std::sqrt(ev) * es.eigenvectors().col(i) *
                    es.eigenvectors().col(i).adjoint();
    }
    const Matrix b = sqrt_rho * yy * sqrt_rho.conjugate();
    Eigen::JacobiSVD<Matrix> svd(b);
    const auto& lambdas = svd.singularValues();  // already descending
    return std::max(0.0, lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3));
}

}  // namespace qtele
