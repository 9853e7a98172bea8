#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "commlab/words/free_word.hpp"

namespace commlab::algebra {

/// Factor scalar + coeff * s_gen of a product, where the s_k are freely
/// independent involutions (generators of a free product of copies of Z/2).
struct InvolutionLetter {
    std::complex<double> scalar;
    std::complex<double> coeff;
    std::int64_t generator;
};

/// Default bound on the letter count accepted by the walk expansion
/// (memory is quadratic, time cubic in it).
inline constexpr std::size_t kDefaultWalkLetterCap = 512;

/// Canonical trace of the product of the letters, i.e. the identity
/// coefficient of its full group-algebra expansion, without materializing it.
///
/// Expanding the product picks, for each letter, either its scalar or its
/// involution; the trace sums the coefficient products over choices whose
/// involution word reduces to the identity. In a free product of Z/2's such a
/// word is a closed walk in the Cayley tree, which decomposes uniquely: the
/// first chosen involution s opens an excursion closed by the first later s at
/// the same depth, and the excursion's interior is a closed walk that never
/// steps back along s at its base. The recursion over intervals [i, j] with
/// one forbidden generator counts every choice exactly once.
///
/// Throws std::length_error when letters.size() exceeds letter_cap.
std::complex<double> free_involution_product_trace(std::span<const InvolutionLetter> letters,
                                                   std::size_t letter_cap = kDefaultWalkLetterCap);

/// Number of x-letters of w once every x^e is split into conjugated factors;
/// the size that free_involution_product_trace sees for exact_word_trace.
std::size_t walk_letter_count(const words::FreeWord& w);

/// Exact trace of w(u, v) in the group algebra of Z/2 * Z, for
/// u = a*1 + b*s (s the order-two generator, u invertible) and v the
/// infinite-cyclic generator. Writing w as a product of v^k u^e v^-k factors
/// turns it into a product over the free involutions s_k = v^k s v^-k.
std::complex<double> exact_word_trace(const words::FreeWord& w, std::complex<double> a,
                                      std::complex<double> b,
                                      std::size_t letter_cap = kDefaultWalkLetterCap);

} // namespace commlab::algebra
