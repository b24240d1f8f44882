// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qtele/types.hpp"

// Inner loops over amplitude arrays, in two lanes: a plain serial reference
// and an OpenMP lane. The serial lane is the oracle in tests; the OpenMP
// lane is written so results do not depend on thread count or schedule
// (independent output slots, or reductions over a fixed chunk grid summed
// in chunk order).

namespace qtele::kernels {

// Bit masks describing a Pauli word on an n-qubit register. `flip` carries
// the X and Y positions, `sign` the Z and Y positions, `y_count` the number
// of Y factors (contributing a global i^y_count).
struct PauliMasks {
    std::uint64_t flip = 0;
    std::uint64_t sign = 0;
    int y_count = 0;
};

PauliMasks pauli_masks(const PauliWord& word, int n_qubits);

namespace serial {

// out[...] = U applied on the target bits; `target_masks[j]` is the single
// bit of the global index addressed by row bit j of `u` (bit 0 of a u-index
// = last target). in and out must not alias.
void apply_dense(std::span<const Complex> in, std::span<Complex> out,
                 const Matrix& u, std::span<const std::uint64_t> target_masks);

// sum_x conj(a[x ^ flip]) * a[x] * (-1)^popcount(x & sign), times i^y_count.
Complex pauli_bilinear(std::span<const Complex> amps, const PauliMasks& m);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace serial

namespace parallel {

void apply_dense(std::span<const Complex> in, std::span<Complex> out,
                 const Matrix& u, std::span<const std::uint64_t> target_masks);

Complex pauli_bilinear(std::span<const Complex> amps, const PauliMasks& m);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace parallel

// Dispatched entry points: OpenMP lane for large registers, serial below
// the cutoff.
void apply_dense(std::span<const Complex> in, std::span<Complex> out,
                 const Matrix& u, std::span<const std::uint64_t> target_masks);
Complex pauli_bilinear(std::span<const Complex> amps, const PauliMasks& m);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace qtele::kernels
