// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <algorithm>
#include <map>

#include "qtele/bases.hpp"
#include "qtele/correlations.hpp"
#include "qtele/random.hpp"

using namespace qtele;

namespace {

CorrelationSpec spec2(std::string_view axes) {
    return CorrelationSpec::parse({1, 2}, axes);
}
CorrelationSpec spec3(std::string_view axes) {
    return CorrelationSpec::parse({1, 2, 3}, axes);
}
CorrelationSpec spec4(std::string_view axes) {
    return CorrelationSpec::parse({1, 2, 3, 4}, axes);
}

}  // namespace

TEST_CASE("pair coefficients on the Bell states") {
    CHECK(corr2(catalog_state("bell.phi+"), spec2("zz")) == doctest::Approx(1.0));
    CHECK(corr2(catalog_state("bell.psi+"), spec2("yy")) == doctest::Approx(1.0));
    CHECK(corr2(StateVector::basis_ket("00"), spec2("zz")) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(corr2(catalog_state("bell.phi+"), spec3("zzz")),
                    std::invalid_argument);
}

TEST_CASE("triple coefficients on cat and sandwich states") {
    CHECK(corr3(catalog_state("ghz.1"), spec3("xxx")) == doctest::Approx(1.0));
    CHECK(corr3(catalog_state("chi.1"), spec3("xxz")) == doctest::Approx(1.0));
    CHECK(corr3(catalog_state("chi.1"), spec3("yyz")) == doctest::Approx(-1.0));

    SUBCASE("the three-qubit product state carries no triple correlation") {
        const auto& product = catalog_state("product3");
        const char axes[] = {'x', 'y', 'z'};
        for (char a : axes)
            for (char b : axes)
                for (char c : axes) {
                    const std::string word{a, b, c};
                    CHECK(std::abs(corr3(product, spec3(word))) < kNonzeroThreshold);
                }
    }
}

TEST_CASE("quadruple coefficients on the four-qubit families") {
    CHECK(corr4(catalog_state("phi4.1"), spec4("xxyy")) == doctest::Approx(1.0));
    CHECK(corr4(catalog_state("yeo_chua.1"), spec4("zzzz")) ==
          doctest::Approx(1.0));

    SUBCASE("the four-qubit Bell-product state carries no quadruple correlation") {
        const auto& product = catalog_state("product4");
        const auto table = nonzero_scan(product, {1, 2, 3, 4}, "product4");
        CHECK(table.rows.size() == 81);
        for (const auto& row : table.rows)
            CHECK(std::abs(row.value) < kNonzeroThreshold);
    }
}

TEST_CASE("partition enumeration hits the Bell numbers") {
    const long expected[] = {1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 1; n <= 8; ++n) {
        long count = 0;
        int max_blocks = 0;
        for_each_partition(n, [&](const std::vector<int>&, int blocks) {
            ++count;
            max_blocks = std::max(max_blocks, blocks);
        });
        CHECK(count == expected[n - 1]);
        CHECK(max_blocks == n);
    }
}

TEST_CASE("the partition sum reduces to the closed forms") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = haar_state(4, rng);
        const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
        auto random_axes = [&](int k) {
            std::vector<Pauli> out;
            for (int i = 0; i < k; ++i) out.push_back(axes[rng.next_u64() % 3]);
            return out;
        };
        const CorrelationSpec s2{{1, 3}, random_axes(2)};
        const CorrelationSpec s3{{1, 2, 4}, random_axes(3)};
        const CorrelationSpec s4{{1, 2, 3, 4}, random_axes(4)};
        CHECK(std::abs(cumulant_n(s, s2) - corr2(s, s2)) < 1e-10);
        CHECK(std::abs(cumulant_n(s, s3) - corr3(s, s3)) < 1e-10);
        CHECK(std::abs(cumulant_n(s, s4) - corr4(s, s4)) < 1e-10);
    }
}

TEST_CASE("cumulants vanish across any product cut") {
    Rng rng(2025);
    for (int trial = 0; trial < 30; ++trial) {
        const auto left = haar_state(2, rng);
        const auto right = haar_state(2, rng);
        const auto product = tensor(left, right);
        const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
        for (int k = 0; k < 5; ++k) {
            CorrelationSpec spec;
            spec.particles = {1, 2, 3, 4};
            for (int i = 0; i < 4; ++i)
                spec.axes.push_back(axes[rng.next_u64() % 3]);
            CHECK(std::abs(cumulant_n(product, spec)) < 1e-10);
        }
    }
}

TEST_CASE("coefficients are symmetric under simultaneous permutation") {
    Rng rng(2026);
    const auto s = haar_state(4, rng);
    const CorrelationSpec base{{1, 2, 3, 4},
                               {Pauli::X, Pauli::Y, Pauli::Z, Pauli::X}};
    const double reference = corr4(s, base);

    const int perms[][4] = {{2, 1, 3, 4}, {4, 3, 2, 1}, {3, 1, 4, 2}};
    for (const auto& p : perms) {
        CorrelationSpec permuted;
        for (int k = 0; k < 4; ++k) {
            permuted.particles.push_back(base.particles[static_cast<std::size_t>(p[k] - 1)]);
            permuted.axes.push_back(base.axes[static_cast<std::size_t>(p[k] - 1)]);
        }
        CHECK(corr4(s, permuted) == doctest::Approx(reference).epsilon(1e-12));
        CHECK(cumulant_n(s, permuted) ==
              doctest::Approx(cumulant_n(s, base)).epsilon(1e-12));
    }
}

TEST_CASE("scan signatures of catalog states") {
    SUBCASE("chi.1") {
        const auto table = nonzero_scan(catalog_state("chi.1"), {1, 2, 3}, "chi.1");
        const auto entries = table.nonzero();
        const std::map<std::string, double> nz(entries.begin(), entries.end());
        REQUIRE(nz.size() == 4);
        CHECK(nz.at("yxy") == doctest::Approx(1.0));
        CHECK(nz.at("xyy") == doctest::Approx(1.0));
        CHECK(nz.at("xxz") == doctest::Approx(1.0));
        CHECK(nz.at("yyz") == doctest::Approx(-1.0));
    }
    SUBCASE("phi4.5") {
        const auto table =
            nonzero_scan(catalog_state("phi4.5"), {1, 2, 3, 4}, "phi4.5");
        const auto entries = table.nonzero();
        const std::map<std::string, double> nz(entries.begin(), entries.end());
        REQUIRE(nz.size() == 4);
        CHECK(nz.at("xxyy") == doctest::Approx(-1.0));
        CHECK(nz.at("xyxy") == doctest::Approx(1.0));
        CHECK(nz.at("yxyx") == doctest::Approx(-1.0));
        CHECK(nz.at("yyxx") == doctest::Approx(1.0));
    }
    SUBCASE("varphi4_prime.1") {
        const auto table = nonzero_scan(catalog_state("varphi4_prime.1"),
                                        {1, 2, 3, 4}, "varphi4_prime.1");
        const auto entries = table.nonzero();
        const std::map<std::string, double> nz(entries.begin(), entries.end());
        REQUIRE(nz.size() == 4);
        CHECK(nz.at("xxxz") == doctest::Approx(1.0));
        CHECK(nz.at("xzxx") == doctest::Approx(-1.0));
        CHECK(nz.at("yxyz") == doctest::Approx(-1.0));
        CHECK(nz.at("yzyx") == doctest::Approx(1.0));
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(CorrelationSpec::parse({1, 1}, "xx").validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(CorrelationSpec::parse({1, 2}, "xq"), std::invalid_argument);
    CorrelationSpec identity_axis{{1, 2}, {Pauli::X, Pauli::I}};
    CHECK_THROWS_AS(identity_axis.validate(), std::invalid_argument);

    CorrelationSpec too_big;
    for (int q = 1; q <= 9; ++q) {
        too_big.particles.push_back(q);
        too_big.axes.push_back(Pauli::X);
    }
    Rng rng(1);
    const auto s = haar_state(9, rng);
    CHECK_THROWS_AS(cumulant_n(s, too_big), std::invalid_argument);
}

TEST_CASE("concurrence of known states") {
    CHECK(concurrence(DensityMatrix::projector(catalog_state("bell.psi-"))) ==
          doctest::Approx(1.0));
    CHECK(concurrence(DensityMatrix::maximally_mixed(2)) == doctest::Approx(0.0));
    CHECK(concurrence(partial_trace(catalog_state("ghz.1"), {1, 2})) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(concurrence(DensityMatrix::maximally_mixed(3)),
                    std::invalid_argument);
}

TEST_CASE("pure-state concurrence matches the closed form") {
    // For |psi> = a|00> + b|01> + c|10> + d|11| the concurrence is
    // 2 |a d - b c|; an independent route to the spin-flip spectrum.
    Rng rng(2027);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = haar_state(2, rng);
        const auto a = s.amplitude(0), b = s.amplitude(1);
        const auto c = s.amplitude(2), d = s.amplitude(3);
        const double direct = 2.0 * std::abs(a * d - b * c);
        CHECK(concurrence(DensityMatrix::projector(s)) ==
              doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("concurrence is invariant under local unitaries") {
    Rng rng(2028);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = haar_state(2, rng);
        const auto u1 = random_unitary(2, rng);
        const auto u2 = random_unitary(2, rng);
        const auto rotated = apply_unitary(apply_unitary(s, u1, {1}), u2, {2});
        const double before = concurrence(DensityMatrix::projector(s));
        const double after = concurrence(DensityMatrix::projector(rotated));
        CHECK(after == doctest::Approx(before).epsilon(1e-9));
    }

    // Mixed states too: mix two random pure states.
    for (int trial = 0; trial < 10; ++trial) {
        const auto s1 = haar_state(2, rng);
        const auto s2 = haar_state(2, rng);
        const Matrix mix = 0.3 * DensityMatrix::projector(s1).entries() +
                           0.7 * DensityMatrix::projector(s2).entries();
        const auto u1 = random_unitary(2, rng);
        const auto u2 = random_unitary(2, rng);
        Matrix u = Matrix::Zero(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                u.block(2 * i, 2 * j, 2, 2) = u1(i, j) * u2;
        const Matrix rotated = u * mix * u.adjoint();
        CHECK(concurrence(DensityMatrix(2, rotated)) ==
              doctest::Approx(concurrence(DensityMatrix(2, mix))).epsilon(1e-9));
    }
}

TEST_CASE("mixed-state expectations agree with pure-state ones") {
    Rng rng(2029);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = haar_state(3, rng);
        const auto rho = DensityMatrix::projector(s);
        const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
        PauliWord w;
        for (int q = 1; q <= 3; ++q)
            if (rng.next_u64() & 1) w.set(q, axes[rng.next_u64() % 3]);
        CHECK(expectation(rho, w) ==
              doctest::Approx(expectation(s, w)).epsilon(1e-12));
    }
}
