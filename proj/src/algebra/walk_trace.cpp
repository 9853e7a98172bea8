#include "commlab/algebra/walk_trace.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace commlab::algebra {

using cplx = std::complex<double>;

cplx free_involution_product_trace(std::span<const InvolutionLetter> letters, std::size_t letter_cap)
{
    const std::size_t m = letters.size();
    if (m > letter_cap) {
        throw std::length_error("walk expansion: " + std::to_string(m) + " letters exceed cap " +
                                std::to_string(letter_cap));
    }
    if (m == 0) {
        return 1.0;
    }
    // Dense generator ids 0..g-1; forbidden slot g means "none".
    std::map<std::int64_t, std::size_t> ids;
    std::vector<std::size_t> gen(m);
    for (std::size_t i = 0; i < m; ++i) {
        gen[i] = ids.try_emplace(letters[i].generator, ids.size()).first->second;
    }
    const std::size_t slots = ids.size() + 1;

    // Later positions carrying the same generator.
    std::vector<std::vector<std::size_t>> partners(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = i + 1; k < m; ++k) {
            if (gen[k] == gen[i]) {
                partners[i].push_back(k);
            }
        }
    }

    // E(i, j, f): weight of closed walks over letters [i, j), no top-level
    // excursion starting with generator f. Empty intervals weigh 1.
    const std::size_t stride_j = slots;
    const std::size_t stride_i = (m + 1) * slots;
    std::vector<cplx> table((m + 1) * stride_i, cplx{});
    auto at = [&](std::size_t i, std::size_t j, std::size_t f) -> cplx& {
        return table[i * stride_i + j * stride_j + f];
    };
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t f = 0; f < slots; ++f) {
            at(i, i, f) = 1.0;
        }
    }
    for (std::size_t i = m; i-- > 0;) {
        const cplx a = letters[i].scalar;
        const cplx b = letters[i].coeff;
        const std::size_t g = gen[i];
        for (std::size_t j = i + 1; j <= m; ++j) {
            for (std::size_t f = 0; f < slots; ++f) {
                cplx total = a * at(i + 1, j, f);
                if (g != f) {
                    for (std::size_t k : partners[i]) {
                        if (k >= j) {
                            break;
                        }
                        total += b * letters[k].coeff * at(i + 1, k, g) * at(k + 1, j, f);
                    }
                }
                at(i, j, f) = total;
            }
        }
    }
    return at(0, m, slots - 1);
}

namespace {

// (p + q s)(r + t s) with s^2 = 1.
std::pair<cplx, cplx> mul2(std::pair<cplx, cplx> x, std::pair<cplx, cplx> y)
{
    return {x.first * y.first + x.second * y.second, x.first * y.second + x.second * y.first};
}

std::pair<cplx, cplx> pow2(cplx a, cplx b, std::int64_t e)
{
    std::pair<cplx, cplx> base{a, b};
    if (e < 0) {
        // (a + b s)^-1 = (a - b s) / (a^2 - b^2)
        const cplx det = a * a - b * b;
        if (std::abs(det) == 0.0) {
            throw std::domain_error("exact_word_trace: u is not invertible");
        }
        base = {a / det, -b / det};
        e = -e;
    }
    std::pair<cplx, cplx> acc{1.0, 0.0};
    while (e) {
        if (e & 1) {
            acc = mul2(acc, base);
        }
        base = mul2(base, base);
        e >>= 1;
    }
    return acc;
}

} // namespace

std::size_t walk_letter_count(const words::FreeWord& w)
{
    std::size_t n = 0;
    for (const auto& s : w.syllables()) {
        if (s.gen == words::kX) {
            ++n;
        } else if (s.gen != words::kY) {
            throw std::invalid_argument("exact_word_trace: word uses generators other than x, y");
        }
    }
    return n;
}

cplx exact_word_trace(const words::FreeWord& w, cplx a, cplx b, std::size_t letter_cap)
{
    walk_letter_count(w);
    std::vector<InvolutionLetter> letters;
    std::int64_t depth = 0;
    for (const auto& s : w.syllables()) {
        if (s.gen == words::kY) {
            depth += s.exp;
        } else {
            const auto [p, q] = pow2(a, b, s.exp);
            letters.push_back({p, q, depth});
        }
    }
    // A leftover power of v maps to a nonzero element of Z, never the identity.
    if (depth != 0) {
        return 0.0;
    }
    return free_involution_product_trace(letters, letter_cap);
}

} // namespace commlab::algebra
