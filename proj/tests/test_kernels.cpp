// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
//
// The serial lane is the reference; the OpenMP lane must agree with it and
// must be deterministic on its own.

#include <doctest.h>

#include "qtele/kernels.hpp"
#include "qtele/random.hpp"
#include "qtele/statevector.hpp"

using namespace qtele;

namespace {

PauliWord random_word(int n, Rng& rng) {
    const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    PauliWord w;
    for (int q = 1; q <= n; ++q)
        if (rng.next_u64() % 3 != 0) w.set(q, axes[rng.next_u64() % 3]);
    return w;
}

}  // namespace

TEST_CASE("parallel apply_dense matches the serial reference bit for bit") {
    Rng rng(1001);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6 + static_cast<int>(rng.next_u64() % 6);
        const auto s = haar_state(n, rng);
        const int k = 1 + static_cast<int>(rng.next_u64() % 3);
        const Matrix u = random_unitary(1 << k, rng);

        std::vector<std::uint64_t> masks;
        std::uint64_t used = 0;
        while (static_cast<int>(masks.size()) < k) {
            const std::uint64_t m = std::uint64_t{1}
                                    << (rng.next_u64() % static_cast<unsigned>(n));
            if (!(used & m)) {
                masks.push_back(m);
                used |= m;
            }
        }

        std::vector<Complex> out_s(s.dim()), out_p(s.dim());
        kernels::serial::apply_dense(s.amplitudes(), out_s, u, masks);
        kernels::parallel::apply_dense(s.amplitudes(), out_p, u, masks);
        // Disjoint output slots see identical arithmetic in both lanes.
        CHECK(out_s == out_p);
    }
}

TEST_CASE("parallel reductions agree with serial within rounding") {
    Rng rng(1002);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_u64() % 9);
        const auto s = haar_state(n, rng);
        const auto w = random_word(n, rng);
        const auto masks = kernels::pauli_masks(w, n);

        const Complex vs = kernels::serial::pauli_bilinear(s.amplitudes(), masks);
        const Complex vp = kernels::parallel::pauli_bilinear(s.amplitudes(), masks);
        CHECK(std::abs(vs - vp) < kAlgebraTol);

        const auto t = haar_state(n, rng);
        const Complex is = kernels::serial::inner(s.amplitudes(), t.amplitudes());
        const Complex ip = kernels::parallel::inner(s.amplitudes(), t.amplitudes());
        CHECK(std::abs(is - ip) < kAlgebraTol);
    }
}

TEST_CASE("the parallel lane is self-deterministic") {
    Rng rng(1003);
    const auto s = haar_state(13, rng);
    const auto w = random_word(13, rng);
    const auto masks = kernels::pauli_masks(w, 13);

    const Complex first = kernels::parallel::pauli_bilinear(s.amplitudes(), masks);
    for (int rerun = 0; rerun < 5; ++rerun) {
        const Complex again =
            kernels::parallel::pauli_bilinear(s.amplitudes(), masks);
        CHECK(first.real() == again.real());
        CHECK(first.imag() == again.imag());
    }
}

TEST_CASE("mask-based expectation equals explicit matrix application") {
    Rng rng(1004);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 4);
        const auto s = haar_state(n, rng);
        const auto w = random_word(n, rng);

        // Oracle: apply the word one factor at a time as a 2x2 unitary.
        StateVector acted = s;
        for (const auto& [q, p] : w.factors())
            acted = apply_unitary(acted, pauli_matrix(p), {q});
        const double direct = inner(s, acted).real();

        CHECK(expectation(s, w) == doctest::Approx(direct).epsilon(1e-12));
    }
}
