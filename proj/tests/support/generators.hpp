#pragma once

// Seeded generators for property tests. Independent of the library RNG so a
// regression there cannot hide behind a matching generator.

#include <complex>
#include <cstdint>
#include <vector>

#include "commlab/linalg/complex_matrix.hpp"
#include "commlab/words/free_word.hpp"

namespace testgen {

class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : s_(seed * 2862933555777941757ULL + 3037000493ULL) {}

    std::uint64_t next()
    {
        s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
        std::uint64_t x = s_;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return x;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
    std::int64_t range(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t s_;
};

/// Unreduced syllable list over x, y with exponents in [-2, 2] (zeros kept).
inline std::vector<commlab::words::Syllable> raw_word(Lcg& rng, int max_len)
{
    std::vector<commlab::words::Syllable> out;
    const auto len = rng.range(0, max_len);
    for (std::int64_t i = 0; i < len; ++i) {
        out.push_back({static_cast<commlab::words::GeneratorId>(rng.range(0, 1)), rng.range(-2, 2)});
    }
    return out;
}

inline commlab::ComplexMatrix random_matrix(Lcg& rng, std::size_t n)
{
    commlab::ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, {rng.symmetric(), rng.symmetric()});
        }
    }
    return m;
}

/// Unitary by Gram-Schmidt on random columns (test-side, not the library QR).
inline commlab::ComplexMatrix random_unitary(Lcg& rng, std::size_t n)
{
    std::vector<std::vector<std::complex<double>>> cols(n, std::vector<std::complex<double>>(n));
    for (std::size_t c = 0; c < n; ++c) {
        for (auto& z : cols[c]) {
            z = {rng.symmetric(), rng.symmetric()};
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                std::complex<double> dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    dot += std::conj(cols[p][i]) * cols[c][i];
                }
                for (std::size_t i = 0; i < n; ++i) {
                    cols[c][i] -= dot * cols[p][i];
                }
            }
        }
        double norm = 0.0;
        for (auto z : cols[c]) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (auto& z : cols[c]) {
            z /= norm;
        }
    }
    commlab::ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, cols[j][i]);
        }
    }
    return m;
}

} // namespace testgen
