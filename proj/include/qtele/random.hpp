// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtele/statevector.hpp"

namespace qtele {

// Seeded randomness with a pinned seed-to-stream mapping: a std::mt19937_64
// engine seeded directly, uniforms as (u64 >> 11) * 2^-53, and normals via
// Box-Muller on consecutive uniform pairs. None of the
// implementation-defined <random> distributions are used, so a given seed
// yields the same stream on every platform and in every release.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double gaussian();

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Haar-uniform pure state: i.i.d. complex Gaussian amplitudes, normalized.
StateVector haar_state(int n_qubits, Rng& rng);

// Haar-uniform state within the span of the given computational kets
// (all of equal length). Used for protocols whose unknown input is
// restricted, e.g. a Bell-type pair a|01> + b|10>.
StateVector haar_state_in_span(const std::vector<std::string>& kets, Rng& rng);

// Haar-ish random unitary (QR of a complex Gaussian matrix); for property
// tests.
Matrix random_unitary(int dim, Rng& rng);

}  // namespace qtele
