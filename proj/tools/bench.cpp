// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
//
// Times the serial reference lane against the OpenMP lane on the hot
// kernels: dense gate application, Pauli-word expectation and a full
// three-axis scan. Usage: qtele_bench [n_qubits] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qtele/correlations.hpp"
#include "qtele/kernels.hpp"
#include "qtele/random.hpp"
#include "qtele/statevector.hpp"

using namespace qtele;

namespace {

template <typename F>
double time_best_of(int repeats, F&& fn) {
    double best = 1e42;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 16;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both lanes run serially\n");
#endif
    std::printf("register: %d qubits (%zu amplitudes), best of %d\n\n", n,
                std::size_t{1} << n, repeats);

    Rng rng(12345);
    const StateVector state = haar_state(n, rng);
    const Matrix u = random_unitary(4, rng);
    const std::vector<std::uint64_t> masks = {std::uint64_t{1} << (n - 1),
                                              std::uint64_t{1} << (n - 3)};
    std::vector<Complex> out(state.dim());

    const double t_apply_s = time_best_of(repeats, [&] {
        kernels::serial::apply_dense(state.amplitudes(), out, u, masks);
    });
    const double t_apply_p = time_best_of(repeats, [&] {
        kernels::parallel::apply_dense(state.amplitudes(), out, u, masks);
    });
    std::printf("apply_dense (2q gate)   serial %8.3f ms   omp %8.3f ms   x%.2f\n",
                1e3 * t_apply_s, 1e3 * t_apply_p, t_apply_s / t_apply_p);

    PauliWord word;
    for (int q = 1; q <= n; ++q)
        word.set(q, q % 3 == 0 ? Pauli::Z : (q % 3 == 1 ? Pauli::X : Pauli::Y));
    const auto pmasks = kernels::pauli_masks(word, n);
    const double t_exp_s = time_best_of(repeats, [&] {
        (void)kernels::serial::pauli_bilinear(state.amplitudes(), pmasks);
    });
    const double t_exp_p = time_best_of(repeats, [&] {
        (void)kernels::parallel::pauli_bilinear(state.amplitudes(), pmasks);
    });
    std::printf("pauli expectation       serial %8.3f ms   omp %8.3f ms   x%.2f\n",
                1e3 * t_exp_s, 1e3 * t_exp_p, t_exp_s / t_exp_p);

    // Full 81-word scan on the first four wires of a mid-size register.
    const int scan_n = std::min(n, 12);
    const StateVector scan_state = haar_state(scan_n, rng);
    const double t_scan = time_best_of(repeats, [&] {
        (void)nonzero_scan(scan_state, {1, 2, 3, 4}, "bench");
    });
    std::printf("3^4 cumulant scan (%2dq) %8.3f ms\n", scan_n, 1e3 * t_scan);
    return 0;
}
