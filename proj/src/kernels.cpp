// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/kernels.hpp"

#include <bit>
#include <cassert>

namespace qtele::kernels {

namespace {

// Dispatch cutoff: below this dimension the serial lane wins outright.
constexpr std::size_t kParallelCutoff = std::size_t{1} << 12;

// Reductions run over a fixed chunk grid and are summed in chunk order, so
// the result does not depend on thread count.
constexpr std::size_t kReductionChunk = std::size_t{1} << 12;

Complex y_phase(int y_count) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[y_count & 3];
}

// Expands a compact index over the non-target bit positions.
struct BaseExpander {
    std::vector<std::uint64_t> free_masks;  // ascending significance

    BaseExpander(std::size_t dim, std::span<const std::uint64_t> target_masks) {
        std::uint64_t taken = 0;
        for (auto m : target_masks) taken |= m;
        for (std::uint64_t b = 1; b < dim; b <<= 1)
            if (!(b & taken)) free_masks.push_back(b);
    }

    std::uint64_t operator()(std::uint64_t compact) const {
        std::uint64_t out = 0;
        for (std::size_t j = 0; j < free_masks.size(); ++j)
            if ((compact >> j) & 1u) out |= free_masks[j];
        return out;
    }
};

}  // namespace

PauliMasks pauli_masks(const PauliWord& word, int n_qubits) {
    PauliMasks m;
    for (const auto& [qubit, p] : word.factors()) {
        if (qubit < 1 || qubit > n_qubits)
            throw std::invalid_argument("pauli_masks: qubit label out of range");
        const std::uint64_t bit = std::uint64_t{1} << (n_qubits - qubit);
        switch (p) {
            case Pauli::I: break;
            case Pauli::X: m.flip |= bit; break;
            case Pauli::Y: m.flip |= bit; m.sign |= bit; ++m.y_count; break;
            case Pauli::Z: m.sign |= bit; break;
        }
    }
    return m;
}

namespace serial {

void apply_dense(std::span<const Complex> in, std::span<Complex> out,
                 const Matrix& u, std::span<const std::uint64_t> target_masks) {
    const std::size_t k = target_masks.size();
    const std::size_t sub_dim = std::size_t{1} << k;
    assert(static_cast<std::size_t>(u.rows()) == sub_dim);
    const BaseExpander expand(in.size(), target_masks);
    const std::size_t n_base = in.size() >> k;

    // Map a sub-index (row/col of u) to its scatter of target bits; u's bit
    // k-1-j addresses target j.
    std::vector<std::uint64_t> sub_bits(sub_dim, 0);
    for (std::size_t s = 0; s < sub_dim; ++s)
        for (std::size_t j = 0; j < k; ++j)
            if ((s >> (k - 1 - j)) & 1u) sub_bits[s] |= target_masks[j];

    for (std::size_t r = 0; r < n_base; ++r) {
        const std::uint64_t base = expand(r);
        for (std::size_t row = 0; row < sub_dim; ++row) {
            Complex acc = 0;
            for (std::size_t col = 0; col < sub_dim; ++col)
                acc += u(row, col) * in[base | sub_bits[col]];
            out[base | sub_bits[row]] = acc;
        }
    }
}

Complex pauli_bilinear(std::span<const Complex> amps, const PauliMasks& m) {
    Complex sum = 0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        const double sgn = (std::popcount(x & m.sign) & 1) ? -1.0 : 1.0;
        sum += std::conj(amps[x ^ m.flip]) * amps[x] * sgn;
    }
    return sum * y_phase(m.y_count);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    Complex sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

}  // namespace serial

namespace parallel {

void apply_dense(std::span<const Complex> in, std::span<Complex> out,
                 const Matrix& u, std::span<const std::uint64_t> target_masks) {
    const std::size_t k = target_masks.size();
    const std::size_t sub_dim = std::size_t{1} << k;
    const BaseExpander expand(in.size(), target_masks);
    const auto n_base = static_cast<std::int64_t>(in.size() >> k);

    std::vector<std::uint64_t> sub_bits(sub_dim, 0);
    for (std::size_t s = 0; s < sub_dim; ++s)
        for (std::size_t j = 0; j < k; ++j)
            if ((s >> (k - 1 - j)) & 1u) sub_bits[s] |= target_masks[j];

    // Each base index owns a disjoint set of output slots.
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n_base; ++r) {
        const std::uint64_t base = expand(static_cast<std::uint64_t>(r));
        for (std::size_t row = 0; row < sub_dim; ++row) {
            Complex acc = 0;
            for (std::size_t col = 0; col < sub_dim; ++col)
                acc += u(row, col) * in[base | sub_bits[col]];
            out[base | sub_bits[row]] = acc;
        }
    }
}

Complex pauli_bilinear(std::span<const Complex> amps, const PauliMasks& m) {
    const std::size_t n_chunks = (amps.size() + kReductionChunk - 1) / kReductionChunk;
    std::vector<Complex> partial(n_chunks, Complex{0, 0});

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t hi = std::min(lo + kReductionChunk, amps.size());
        Complex acc = 0;
        for (std::size_t x = lo; x < hi; ++x) {
            const double sgn = (std::popcount(x & m.sign) & 1) ? -1.0 : 1.0;
            acc += std::conj(amps[x ^ m.flip]) * amps[x] * sgn;
        }
        partial[static_cast<std::size_t>(c)] = acc;
    }

    Complex sum = 0;
    for (const auto& p : partial) sum += p;
    return sum * y_phase(m.y_count);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    const std::size_t n_chunks = (a.size() + kReductionChunk - 1) / kReductionChunk;
    std::vector<Complex> partial(n_chunks, Complex{0, 0});

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t hi = std::min(lo + kReductionChunk, a.size());
        Complex acc = 0;
        for (std::size_t i = lo; i < hi; ++i) acc += std::conj(a[i]) * b[i];
        partial[static_cast<std::size_t>(c)] = acc;
    }

    Complex sum = 0;
    for (const auto& p : partial) sum += p;
    return sum;
}

}  // namespace parallel

void apply_dense(std::span<const Complex> in, std::span<Complex> out,
                 const Matrix& u, std::span<const std::uint64_t> target_masks) {
    if (in.size() >= kParallelCutoff)
        parallel::apply_dense(in, out, u, target_masks);
    else
        serial::apply_dense(in, out, u, target_masks);
}

Complex pauli_bilinear(std::span<const Complex> amps, const PauliMasks& m) {
    if (amps.size() >= kParallelCutoff) return parallel::pauli_bilinear(amps, m);
    return serial::pauli_bilinear(amps, m);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() >= kParallelCutoff) return parallel::inner(a, b);
    return serial::inner(a, b);
}

}  // namespace qtele::kernels
