// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/bases.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace qtele {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// (a + b)/sqrt(2), (a - b)/sqrt(2)
std::pair<StateVector, StateVector> plus_minus(const StateVector& a,
                                               const StateVector& b) {
    std::vector<Complex> p(a.dim()), m(a.dim());
    const auto as = a.amplitudes();
    const auto bs = b.amplitudes();
    for (std::size_t i = 0; i < as.size(); ++i) {
        p[i] = (as[i] + bs[i]) * kInvSqrt2;
        m[i] = (as[i] - bs[i]) * kInvSqrt2;
    }
    return {StateVector(a.n_qubits(), std::move(p)),
            StateVector(a.n_qubits(), std::move(m))};
}

void append_pair(BasisSet& set, const StateVector& a, const StateVector& b) {
    auto [p, m] = plus_minus(a, b);
    const auto k = set.members.size();
    set.members.emplace_back(set.name + "." + std::to_string(k + 1), std::move(p));
    set.members.emplace_back(set.name + "." + std::to_string(k + 2), std::move(m));
}

void relabel(BasisSet& set, const std::vector<int>& particles) {
    bool identity = true;
    for (std::size_t k = 0; k < particles.size(); ++k)
        identity &= (particles[k] == static_cast<int>(k) + 1);
    if (identity) return;
    for (auto& [label, state] : set.members)
        state = permute_qubits(state, particles);
}

// Particle lists accept any distinct labels; only their relative order
// matters for a standalone state, so (3,4,5,6) is the identity wiring and
// (1,3,2) swaps the last two roles.
std::vector<int> particle_ranks(const std::vector<int>& particles,
                                std::size_t n, const char* what) {
    if (particles.size() != n)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(n) + " particle labels");
    std::vector<int> sorted(particles);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument(std::string(what) +
                                    ": repeated particle label");
    std::vector<int> ranks;
    ranks.reserve(n);
    for (int p : particles) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
        ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return ranks;
}

const StateVector& k0() {
    static const StateVector s = StateVector::basis_ket("0");
    return s;
}
const StateVector& k1() {
    static const StateVector s = StateVector::basis_ket("1");
    return s;
}

}  // namespace

BellKind bell_kind_from(std::string_view name) {
    if (name == "phi+") return BellKind::PhiPlus;
    if (name == "phi-") return BellKind::PhiMinus;
    if (name == "psi+") return BellKind::PsiPlus;
    if (name == "psi-") return BellKind::PsiMinus;
    throw std::invalid_argument("unknown Bell state: " + std::string(name));
}

std::string bell_kind_name(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "?";
}

const StateVector& BasisSet::member(std::string_view label) const {
    for (const auto& [l, s] : members)
        if (l == label) return s;
    throw std::invalid_argument("no basis member labeled " + std::string(label));
}

bool BasisSet::is_complete() const {
    return members.size() == (std::size_t{1} << n_qubits);
}

Matrix BasisSet::gram() const {
    const auto m = static_cast<Eigen::Index>(members.size());
    Matrix g(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            g(i, j) = inner(members[static_cast<std::size_t>(i)].second,
                            members[static_cast<std::size_t>(j)].second);
    return g;
}

double BasisSet::max_gram_offdiag() const {
    const Matrix g = gram();
    double worst = 0;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            if (i != j) worst = std::max(worst, std::abs(g(i, j)));
    return worst;
}

double BasisSet::max_norm_error() const {
    double worst = 0;
    for (const auto& [l, s] : members)
        worst = std::max(worst, std::abs(s.norm() - 1.0));
    return worst;
}

void BasisSet::require_orthonormal(double tol) const {
    if (max_norm_error() > tol)
        throw std::runtime_error("basis " + name + ": member not normalized");
    if (max_gram_offdiag() > tol)
        throw std::runtime_error("basis " + name + ": members not orthogonal");
}

double BasisSet::completeness_error() const {
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    Matrix acc = Matrix::Zero(d, d);
    for (const auto& [l, s] : members) {
        const auto amps = s.amplitudes();
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                acc(i, j) += amps[static_cast<std::size_t>(i)] *
                             std::conj(amps[static_cast<std::size_t>(j)]);
    }
    return (acc - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

StateVector bell_pair(BellKind kind, const std::vector<int>& particles) {
    const auto ranks = particle_ranks(particles, 2, "bell_pair");
    std::vector<Complex> amps(4, Complex{0, 0});
    switch (kind) {
        case BellKind::PhiPlus:  amps[0] = kInvSqrt2; amps[3] = kInvSqrt2; break;
        case BellKind::PhiMinus: amps[0] = kInvSqrt2; amps[3] = -kInvSqrt2; break;
        case BellKind::PsiPlus:  amps[1] = kInvSqrt2; amps[2] = kInvSqrt2; break;
        case BellKind::PsiMinus: amps[1] = kInvSqrt2; amps[2] = -kInvSqrt2; break;
    }
    StateVector s(2, std::move(amps));
    return permute_qubits(s, ranks);
}

BasisSet ghz_basis(const std::vector<int>& particles) {
    const auto ranks = particle_ranks(particles, 3, "ghz_basis");
    BasisSet set{"ghz", 3, {}};
    const char* pairs[4][2] = {{"000", "111"}, {"010", "101"},
                               {"011", "100"}, {"001", "110"}};
    for (const auto& [a, b] : pairs)
        append_pair(set, StateVector::basis_ket(a), StateVector::basis_ket(b));
    relabel(set, ranks);
    return set;
}

namespace {

// Bell(12) x single(3) pairing used by the chi family, on role wires
// (bellA, bellB, single) -> labels.
BasisSet bell_single_family(const std::string& name,
                            const std::vector<int>& labels) {
    BasisSet set{name, 3, {}};
    const BellKind phis[2] = {BellKind::PhiPlus, BellKind::PhiMinus};
    const BellKind psis[2] = {BellKind::PsiPlus, BellKind::PsiMinus};
    for (const auto* kinds : {phis, psis}) {
        // (B+ |0> , B- |1>) then (B+ |1> , B- |0>)
        append_pair(set, tensor(bell_pair(kinds[0]), k0()),
                    tensor(bell_pair(kinds[1]), k1()));
        append_pair(set, tensor(bell_pair(kinds[0]), k1()),
                    tensor(bell_pair(kinds[1]), k0()));
    }
    relabel(set, labels);
    return set;
}

}  // namespace

BasisSet chi_basis(const std::vector<int>& particles) {
    const auto p = particle_ranks(particles, 3, "chi_basis");
    // Bell halves on (p1,p2), single on p3.
    return bell_single_family("chi", {p[0], p[1], p[2]});
}

BasisSet varphi_basis(const std::vector<int>& particles) {
    const auto p = particle_ranks(particles, 3, "varphi_basis");
    // single on p1, Bell halves on (p2,p3): role order is (bellA,bellB,single).
    return bell_single_family("varphi", {p[1], p[2], p[0]});
}

BasisSet chi_prime_basis(const std::vector<int>& particles) {
    const auto p = particle_ranks(particles, 3, "chi_prime_basis");
    // Bell halves on (p1,p3), single on p2.
    return bell_single_family("chi_prime", {p[0], p[2], p[1]});
}

std::string four_qubit_family_name(FourQubitFamily family) {
    switch (family) {
        case FourQubitFamily::First: return "phi4";
        case FourQubitFamily::Second: return "varphi4";
        case FourQubitFamily::SecondAlt: return "chi4";
        case FourQubitFamily::Variant: return "varphi4_prime";
        case FourQubitFamily::BellProduct: return "bell_product";
        case FourQubitFamily::YeoChua: return "yeo_chua";
    }
    return "?";
}

std::optional<FourQubitFamily> four_qubit_family_from(std::string_view name) {
    if (name == "phi4") return FourQubitFamily::First;
    if (name == "varphi4") return FourQubitFamily::Second;
    if (name == "chi4") return FourQubitFamily::SecondAlt;
    if (name == "varphi4_prime") return FourQubitFamily::Variant;
    if (name == "bell_product") return FourQubitFamily::BellProduct;
    if (name == "yeo_chua") return FourQubitFamily::YeoChua;
    return std::nullopt;
}

namespace {

// |x>1 Bell(23) |y>4 sandwiches: pairs (x B+ y , x~ B- y~) over
// x,y in {0,1} and B in {phi, psi}; then the same with x inverted.
BasisSet first_four_set() {
    BasisSet set{"phi4", 4, {}};
    const StateVector* single[2] = {&k0(), &k1()};
    for (int x = 0; x <= 1; ++x)
        for (int bell = 0; bell <= 1; ++bell)
            for (int y = 0; y <= 1; ++y) {
                const BellKind plus =
                    bell ? BellKind::PsiPlus : BellKind::PhiPlus;
                const BellKind minus =
                    bell ? BellKind::PsiMinus : BellKind::PhiMinus;
                append_pair(set,
                            tensor(tensor(*single[x], bell_pair(plus)), *single[y]),
                            tensor(tensor(*single[1 - x], bell_pair(minus)),
                                   *single[1 - y]));
            }
    return set;
}

// Cat-state x single(4) family: inner pairing (g, g') with the partner two
// places down the cat list.
BasisSet second_four_set() {
    BasisSet set{"varphi4", 4, {}};
    const BasisSet cats = ghz_basis();
    const int pairing[8][2] = {{1, 3}, {2, 4}, {1, 3}, {2, 4},
                               {5, 7}, {6, 8}, {5, 7}, {6, 8}};
    const int outer[8] = {0, 0, 1, 1, 0, 0, 1, 1};
    const StateVector* single[2] = {&k0(), &k1()};
    for (int row = 0; row < 8; ++row) {
        const auto& ca = cats.member(static_cast<std::size_t>(pairing[row][0] - 1));
        const auto& cb = cats.member(static_cast<std::size_t>(pairing[row][1] - 1));
        const int y = outer[row];
        append_pair(set, tensor(ca, *single[y]), tensor(cb, *single[1 - y]));
    }
    return set;
}

// Same family re-expressed as |x>1 Bell(24) |y>3 with the (phi,psi) letter
// slaved to the outer flip.
BasisSet second_alt_four_set() {
    BasisSet set{"chi4", 4, {}};
    const StateVector* single[2] = {&k0(), &k1()};
    const BellKind bells[2][2] = {{BellKind::PhiPlus, BellKind::PsiPlus},
                                  {BellKind::PhiMinus, BellKind::PsiMinus}};
    for (int x = 0; x <= 1; ++x)
        for (int sign = 0; sign <= 1; ++sign)
            for (int y = 0; y <= 1; ++y) {
                // roles: (single1, bellA, bellB, single3) -> labels (1,2,4,3)
                auto a = permute_qubits(
                    tensor(tensor(*single[x], bell_pair(bells[sign][0])),
                           *single[y]),
                    {1, 2, 4, 3});
                auto b = permute_qubits(
                    tensor(tensor(*single[1 - x], bell_pair(bells[sign][1])),
                           *single[1 - y]),
                    {1, 2, 4, 3});
                append_pair(set, a, b);
            }
    return set;
}

BasisSet variant_four_set() {
    BasisSet set{"varphi4_prime", 4, {}};
    const BasisSet cats = ghz_basis();
    // (cat index, single) pairs, in display order.
    const int rows[8][4] = {{1, 0, 4, 1}, {3, 1, 2, 0}, {1, 1, 4, 0},
                            {3, 0, 2, 1}, {5, 0, 8, 1}, {7, 1, 6, 0},
                            {5, 1, 8, 0}, {7, 0, 6, 1}};
    const StateVector* single[2] = {&k0(), &k1()};
    for (const auto& r : rows) {
        const auto& ca = cats.member(static_cast<std::size_t>(r[0] - 1));
        const auto& cb = cats.member(static_cast<std::size_t>(r[2] - 1));
        append_pair(set, tensor(ca, *single[r[1]]), tensor(cb, *single[r[3]]));
    }
    return set;
}

BasisSet bell_product_four_set() {
    BasisSet set{"bell_product", 4, {}};
    const BellKind order[4] = {BellKind::PhiPlus, BellKind::PhiMinus,
                               BellKind::PsiPlus, BellKind::PsiMinus};
    int k = 1;
    for (BellKind outer : order)
        for (BellKind innerk : order) {
            // Bell(14) x Bell(23): roles (1,4,2,3).
            auto s = permute_qubits(tensor(bell_pair(outer), bell_pair(innerk)),
                                    {1, 4, 2, 3});
            set.members.emplace_back("bell_product." + std::to_string(k++),
                                     std::move(s));
        }
    return set;
}

BasisSet yeo_chua_four_set() {
    BasisSet set{"yeo_chua", 4, {}};
    // Generator: equal superposition of two branch states, one per value of
    // the first qubit.
    std::vector<Complex> z0(16, Complex{0, 0}), z1(16, Complex{0, 0});
    z0[0b0000] = 0.5; z0[0b0011] = -0.5; z0[0b0101] = -0.5; z0[0b0110] = 0.5;
    z1[0b1001] = 0.5; z1[0b1010] = 0.5; z1[0b1100] = 0.5; z1[0b1111] = 0.5;
    auto [gen, unused] = plus_minus(StateVector(4, std::move(z0)),
                                    StateVector(4, std::move(z1)));
    (void)unused;
    const Pauli order[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    int k = 1;
    for (Pauli p1 : order)
        for (Pauli p2 : order) {
            StateVector s = gen;
            if (p2 != Pauli::I) s = apply_unitary(s, pauli_matrix(p2), {2});
            if (p1 != Pauli::I) s = apply_unitary(s, pauli_matrix(p1), {1});
            set.members.emplace_back("yeo_chua." + std::to_string(k++),
                                     std::move(s));
        }
    return set;
}

}  // namespace

BasisSet four_particle_set(FourQubitFamily family,
                           const std::vector<int>& particles) {
    const auto ranks = particle_ranks(particles, 4, "four_particle_set");
    BasisSet set;
    switch (family) {
        case FourQubitFamily::First: set = first_four_set(); break;
        case FourQubitFamily::Second: set = second_four_set(); break;
        case FourQubitFamily::SecondAlt: set = second_alt_four_set(); break;
        case FourQubitFamily::Variant: set = variant_four_set(); break;
        case FourQubitFamily::BellProduct: set = bell_product_four_set(); break;
        case FourQubitFamily::YeoChua: set = yeo_chua_four_set(); break;
    }
    relabel(set, ranks);
    return set;
}

std::vector<SeparableExample> separable_examples() {
    std::vector<SeparableExample> out;

    {
        SeparableExample ex;
        ex.label = "product3";
        std::vector<Complex> amps(8, Complex{0, 0});
        amps[0b000] = 0.5; amps[0b110] = 0.5; amps[0b001] = 0.5; amps[0b111] = 0.5;
        ex.state = StateVector(3, std::move(amps));
        ex.factor_particles = {{1, 2}, {3}};
        ex.factors.push_back(bell_pair(BellKind::PhiPlus));
        ex.factors.push_back(StateVector(
            1, {Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0}}));
        out.push_back(std::move(ex));
    }
    {
        SeparableExample ex;
        ex.label = "product4";
        std::vector<Complex> amps(16, Complex{0, 0});
        amps[0b0000] = 0.5; amps[0b1001] = 0.5; amps[0b0110] = 0.5;
        amps[0b1111] = 0.5;
        ex.state = StateVector(4, std::move(amps));
        ex.factor_particles = {{1, 4}, {2, 3}};
        ex.factors.push_back(bell_pair(BellKind::PhiPlus));
        ex.factors.push_back(bell_pair(BellKind::PhiPlus));
        out.push_back(std::move(ex));
    }
    return out;
}

StateVector SeparableExample::product() const {
    StateVector acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) acc = tensor(acc, factors[k]);
    std::vector<int> labels;
    for (const auto& group : factor_particles)
        labels.insert(labels.end(), group.begin(), group.end());
    return permute_qubits(acc, labels);
}

BasisSet generalized_basis(int n_pairs) {
    if (n_pairs < 2 || n_pairs > 6)
        throw std::invalid_argument("generalized_basis: N must be in 2..6");
    if (n_pairs == 2) {
        BasisSet set = first_four_set();
        set.name = "gen4";
        for (std::size_t k = 0; k < set.members.size(); ++k)
            set.members[k].first = "gen4." + std::to_string(k + 1);
        return set;
    }
    const BasisSet inner = generalized_basis(n_pairs - 1);
    BasisSet set{"gen" + std::to_string(2 * n_pairs), 2 * n_pairs, {}};
    for (std::size_t j = 0; j + 1 < inner.members.size(); j += 2) {
        const auto a = tensor(tensor(k0(), inner.members[j].second), k0());
        const auto b = tensor(tensor(k1(), inner.members[j + 1].second), k1());
        append_pair(set, a, b);
    }
    return set;
}

std::vector<PhaseMatch> match_up_to_phase(const BasisSet& a, const BasisSet& b,
                                          double tol) {
    if (a.n_qubits != b.n_qubits || a.members.size() != b.members.size())
        throw std::invalid_argument("match_up_to_phase: size mismatch");
    std::vector<PhaseMatch> out;
    std::vector<bool> used(b.members.size(), false);
    for (const auto& [la, sa] : a.members) {
        bool found = false;
        for (std::size_t j = 0; j < b.members.size(); ++j) {
            if (used[j]) continue;
            const Complex ov = inner(b.members[j].second, sa);
            if (std::abs(std::abs(ov) - 1.0) < tol) {
                out.push_back({j, ov});
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error("match_up_to_phase: no partner for " + la);
    }
    return out;
}

namespace {

std::map<std::string, StateVector> build_catalog() {
    std::map<std::string, StateVector> cat;
    const char* bells[4] = {"phi+", "phi-", "psi+", "psi-"};
    for (const char* b : bells)
        cat.emplace("bell." + std::string(b), bell_pair(bell_kind_from(b)));
    for (const BasisSet& set :
         {ghz_basis(), chi_basis(), varphi_basis(), chi_prime_basis()})
        for (const auto& [label, state] : set.members) cat.emplace(label, state);
    for (FourQubitFamily fam :
         {FourQubitFamily::First, FourQubitFamily::Second,
          FourQubitFamily::SecondAlt, FourQubitFamily::Variant,
          FourQubitFamily::BellProduct, FourQubitFamily::YeoChua})
        for (const auto& [label, state] : four_particle_set(fam).members)
            cat.emplace(label, state);
    for (int n : {3, 4, 5, 6})
        for (const auto& [label, state] : generalized_basis(n).members)
            cat.emplace(label, state);
    for (const auto& ex : separable_examples()) cat.emplace(ex.label, ex.state);
    return cat;
}

const std::map<std::string, StateVector>& catalog() {
    static const std::map<std::string, StateVector> cat = build_catalog();
    return cat;
}

}  // namespace

const StateVector& catalog_state(std::string_view label) {
    const auto& cat = catalog();
    auto it = cat.find(std::string(label));
    if (it == cat.end())
        throw std::invalid_argument("unknown state label: " + std::string(label));
    return it->second;
}

std::vector<std::string> catalog_labels() {
    std::vector<std::string> out;
    for (const auto& [label, state] : catalog()) out.push_back(label);
    return out;
}

BasisSet basis_by_name(std::string_view family) {
    if (family == "ghz") return ghz_basis();
    if (family == "chi") return chi_basis();
    if (family == "varphi") return varphi_basis();
    if (family == "chi_prime") return chi_prime_basis();
    if (auto f4 = four_qubit_family_from(family)) return four_particle_set(*f4);
    if (family.starts_with("gen")) {
        const int total = std::stoi(std::string(family.substr(3)));
        if (total % 2 != 0)
            throw std::invalid_argument("generalized family needs an even qubit count");
        return generalized_basis(total / 2);
    }
    throw std::invalid_argument("unknown basis family: " + std::string(family));
}

std::vector<std::string> basis_family_names() {
    return {"ghz",          "chi",       "varphi",       "chi_prime",
            "phi4",         "varphi4",   "chi4",         "varphi4_prime",
            "bell_product", "yeo_chua",  "gen4",         "gen6",
            "gen8",         "gen10",     "gen12"};
}

}  // namespace qtele
