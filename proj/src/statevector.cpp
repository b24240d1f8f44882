// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>

#include "qtele/kernels.hpp"

namespace qtele {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count must be in 1.." +
                                    std::to_string(kMaxQubits));
}

void check_labels(const std::vector<int>& labels, int n_qubits,
                  const char* what) {
    std::set<int> seen;
    for (int q : labels) {
        if (q < 1 || q > n_qubits)
            throw std::invalid_argument(std::string(what) +
                                        ": qubit label out of range");
        if (!seen.insert(q).second)
            throw std::invalid_argument(std::string(what) +
                                        ": repeated qubit label");
    }
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': case 'i': return Pauli::I;
        case 'X': case 'x': return Pauli::X;
        case 'Y': case 'y': return Pauli::Y;
        case 'Z': case 'z': return Pauli::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli axis: ") + c);
}

const Matrix& pauli_matrix(Pauli p) {
    static const Matrix mats[4] = {
        (Matrix(2, 2) << 1, 0, 0, 1).finished(),
        (Matrix(2, 2) << 0, 1, 1, 0).finished(),
        (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
        (Matrix(2, 2) << 1, 0, 0, -1).finished(),
    };
    return mats[static_cast<int>(p)];
}

PauliWord::PauliWord(std::initializer_list<std::pair<const int, Pauli>> init) {
    for (const auto& [q, p] : init) set(q, p);
}

PauliWord PauliWord::single(int qubit, Pauli p) {
    PauliWord w;
    w.set(qubit, p);
    return w;
}

void PauliWord::set(int qubit, Pauli p) {
    if (qubit < 1) throw std::invalid_argument("PauliWord: labels are 1-based");
    if (p == Pauli::I)
        factors_.erase(qubit);
    else
        factors_[qubit] = p;
}

Pauli PauliWord::at(int qubit) const {
    auto it = factors_.find(qubit);
    return it == factors_.end() ? Pauli::I : it->second;
}

int PauliWord::max_qubit() const {
    return factors_.empty() ? 0 : factors_.rbegin()->first;
}

std::string PauliWord::str() const {
    if (factors_.empty()) return "I";
    std::string out;
    for (const auto& [q, p] : factors_) {
        if (!out.empty()) out += ' ';
        out += pauli_char(p);
        out += std::to_string(q);
    }
    return out;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0, 0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits))
        throw std::invalid_argument("amplitude count must be 2^n_qubits");
}

StateVector StateVector::basis_ket(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("basis_ket: empty bitstring");
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("basis_ket: bitstring must be 0/1");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    StateVector s(static_cast<int>(bits.size()));
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

StateVector& StateVector::normalize() {
    const double n = norm();
    if (n < kNullProbability)
        throw std::runtime_error("normalize: zero vector");
    for (auto& a : amps_) a /= n;
    return *this;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const int n = a.n_qubits() + b.n_qubits();
    check_qubit_count(n);
    std::vector<Complex> out(std::size_t{1} << n);
    const auto as = a.amplitudes();
    const auto bs = b.amplitudes();
    for (std::size_t i = 0; i < as.size(); ++i) {
        const std::size_t hi = i << b.n_qubits();
        for (std::size_t j = 0; j < bs.size(); ++j) out[hi | j] = as[i] * bs[j];
    }
    return {n, std::move(out)};
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("inner: dimension mismatch");
    return kernels::inner(a.amplitudes(), b.amplitudes());
}

bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
               .cwiseAbs()
               .maxCoeff() < tol;
}

StateVector apply_unitary(const StateVector& s, const Matrix& u,
                          const std::vector<int>& targets) {
    if (targets.empty()) throw std::invalid_argument("apply_unitary: no targets");
    check_labels(targets, s.n_qubits(), "apply_unitary");
    const auto k = targets.size();
    if (u.rows() != u.cols() ||
        static_cast<std::size_t>(u.rows()) != (std::size_t{1} << k))
        throw std::invalid_argument("apply_unitary: matrix dim != 2^targets");
    if (!is_unitary(u))
        throw std::invalid_argument("apply_unitary: matrix is not unitary");

    std::vector<std::uint64_t> masks(k);
    for (std::size_t j = 0; j < k; ++j)
        masks[j] = std::uint64_t{1} << (s.n_qubits() - targets[j]);

    std::vector<Complex> out(s.dim());
    kernels::apply_dense(s.amplitudes(), out, u, masks);
    return {s.n_qubits(), std::move(out)};
}

double expectation(const StateVector& s, const PauliWord& w) {
    const auto masks = kernels::pauli_masks(w, s.n_qubits());
    return kernels::pauli_bilinear(s.amplitudes(), masks).real();
}

double expectation(const DensityMatrix& rho, const PauliWord& w) {
    if (w.max_qubit() > rho.n_qubits())
        throw std::invalid_argument("expectation: qubit label out of range");
    const int n = rho.n_qubits();
    // tr(rho P) = sum_x rho(x, x ^ flip) c(x), with P|x> = c(x)|x ^ flip>.
    const auto m = kernels::pauli_masks(w, n);
    Complex sum = 0;
    for (std::size_t x = 0; x < rho.dim(); ++x) {
        const double sgn = (std::popcount(x & m.sign) & 1) ? -1.0 : 1.0;
        sum += rho.entries()(static_cast<Eigen::Index>(x),
                             static_cast<Eigen::Index>(x ^ m.flip)) * sgn;
    }
    static const Complex iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return (sum * iphase[m.y_count & 3]).real();
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
    check_qubit_count(n_qubits);
    const auto d = Eigen::Index{1} << n_qubits;
    if (entries_.rows() != d || entries_.cols() != d)
        throw std::invalid_argument("DensityMatrix: entries must be 2^n x 2^n");
}

DensityMatrix DensityMatrix::projector(const StateVector& s) {
    const auto d = static_cast<Eigen::Index>(s.dim());
    Matrix m(d, d);
    const auto amps = s.amplitudes();
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            m(i, j) = amps[static_cast<std::size_t>(i)] *
                      std::conj(amps[static_cast<std::size_t>(j)]);
    return {s.n_qubits(), std::move(m)};
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    const auto d = Eigen::Index{1} << n_qubits;
    return {n_qubits, Matrix::Identity(d, d) / static_cast<double>(d)};
}

void DensityMatrix::validate() const {
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
        throw std::runtime_error("DensityMatrix: not Hermitian");
    if (std::abs(entries_.trace() - Complex{1, 0}) > kAlgebraTol)
        throw std::runtime_error("DensityMatrix: trace != 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_);
    if (solver.eigenvalues().minCoeff() < -kEigenvalueTol)
        throw std::runtime_error("DensityMatrix: negative eigenvalue");
}

std::vector<int> QubitWiring::alice() const {
    std::vector<int> out = alice_unknown;
    out.insert(out.end(), alice_carrier.begin(), alice_carrier.end());
    return out;
}

int QubitWiring::total() const {
    return static_cast<int>(alice_unknown.size() + alice_carrier.size() +
                            bob.size());
}

void QubitWiring::validate() const {
    const int n = total();
    std::vector<int> all = alice();
    all.insert(all.end(), bob.begin(), bob.end());
    std::set<int> seen(all.begin(), all.end());
    if (static_cast<int>(seen.size()) != n || *seen.begin() != 1 ||
        *seen.rbegin() != n)
        throw std::invalid_argument(
            "QubitWiring: labels must form a permutation of 1..n");
}

namespace {

// Gathers the amplitude index from a (kept-bits, traced-bits) pair.
struct IndexSplitter {
    std::vector<int> keep_shift;   // shift of output bit j in the input index
    std::vector<int> env_shift;
    int n;

    IndexSplitter(int n_qubits, const std::vector<int>& keep) : n(n_qubits) {
        std::set<int> keepset(keep.begin(), keep.end());
        for (int q : keep) keep_shift.push_back(n - q);
        for (int q = 1; q <= n; ++q)
            if (!keepset.count(q)) env_shift.push_back(n - q);
    }

    std::size_t index(std::size_t kept, std::size_t env) const {
        std::size_t out = 0;
        const auto nk = keep_shift.size();
        for (std::size_t j = 0; j < nk; ++j)
            if ((kept >> (nk - 1 - j)) & 1u)
                out |= std::size_t{1} << keep_shift[j];
        const auto ne = env_shift.size();
        for (std::size_t j = 0; j < ne; ++j)
            if ((env >> (ne - 1 - j)) & 1u)
                out |= std::size_t{1} << env_shift[j];
        return out;
    }
};

}  // namespace

DensityMatrix partial_trace(const StateVector& s, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep list");
    check_labels(keep, s.n_qubits(), "partial_trace");
    const int nk = static_cast<int>(keep.size());
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t de = std::size_t{1} << (s.n_qubits() - nk);
    const IndexSplitter split(s.n_qubits(), keep);
    const auto amps = s.amplitudes();

    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dk),
                              static_cast<Eigen::Index>(dk));
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            Complex acc = 0;
            for (std::size_t e = 0; e < de; ++e)
                acc += amps[split.index(i, e)] * std::conj(amps[split.index(j, e)]);
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    return {nk, std::move(rho)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep list");
    check_labels(keep, rho.n_qubits(), "partial_trace");
    const int nk = static_cast<int>(keep.size());
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t de = std::size_t{1} << (rho.n_qubits() - nk);
    const IndexSplitter split(rho.n_qubits(), keep);

    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk),
                              static_cast<Eigen::Index>(dk));
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            Complex acc = 0;
            for (std::size_t e = 0; e < de; ++e)
                acc += rho.entries()(static_cast<Eigen::Index>(split.index(i, e)),
                                     static_cast<Eigen::Index>(split.index(j, e)));
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    return {nk, std::move(out)};
}

double fidelity(const StateVector& target, const StateVector& got) {
    return std::norm(inner(target, got));
}

double fidelity(const StateVector& target, const DensityMatrix& got) {
    if (target.n_qubits() != got.n_qubits())
        throw std::invalid_argument("fidelity: dimension mismatch");
    const auto amps = target.amplitudes();
    Complex acc = 0;
    for (std::size_t i = 0; i < amps.size(); ++i)
        for (std::size_t j = 0; j < amps.size(); ++j)
            acc += std::conj(amps[i]) *
                   got.entries()(static_cast<Eigen::Index>(i),
                                 static_cast<Eigen::Index>(j)) *
                   amps[j];
    return acc.real();
}

StateVector permute_qubits(const StateVector& s, const std::vector<int>& labels) {
    const int n = s.n_qubits();
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("permute_qubits: need one label per qubit");
    check_labels(labels, n, "permute_qubits");

    std::vector<Complex> out(s.dim());
    const auto amps = s.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t g = 0;
        for (int k = 0; k < n; ++k)
            if ((idx >> (n - 1 - k)) & 1u)
                g |= std::size_t{1} << (n - labels[static_cast<std::size_t>(k)]);
        out[g] = amps[idx];
    }
    return {n, std::move(out)};
}

}  // namespace qtele
