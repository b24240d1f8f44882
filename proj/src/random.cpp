// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace qtele {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

StateVector haar_state(int n_qubits, Rng& rng) {
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        a = Complex{re, im};
    }
    StateVector s(n_qubits, std::move(amps));
    return s.normalize();
}

StateVector haar_state_in_span(const std::vector<std::string>& kets, Rng& rng) {
    if (kets.empty())
        throw std::invalid_argument("haar_state_in_span: empty span");
    const int n = static_cast<int>(kets.front().size());
    std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
    for (const auto& ket : kets) {
        if (static_cast<int>(ket.size()) != n)
            throw std::invalid_argument("haar_state_in_span: ragged kets");
        std::size_t idx = 0;
        for (char c : ket) idx = (idx << 1) | static_cast<std::size_t>(c == '1');
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        amps[idx] = Complex{re, im};
    }
    StateVector s(n, std::move(amps));
    return s.normalize();
}

Matrix random_unitary(int dim, Rng& rng) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            g(i, j) = Complex{re, im};
        }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    // Fix the phase freedom so Q is uniquely determined by G.
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace qtele
