#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace commlab::words {

using GeneratorId = int;

inline constexpr GeneratorId kX = 0;
inline constexpr GeneratorId kY = 1;

struct Syllable {
    GeneratorId gen;
    std::int64_t exp;

    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Reduced word in a free group, run-length encoded: adjacent syllables have
/// distinct generators and no exponent is zero. The empty word is the identity.
class FreeWord {
public:
    FreeWord() = default;

    /// Cancels and merges with a stack; linear in the number of syllables.
    static FreeWord reduce(std::span<const Syllable> raw);
    static FreeWord generator(GeneratorId g, std::int64_t exp = 1);

    const std::vector<Syllable>& syllables() const noexcept { return syl_; }
    bool is_identity() const noexcept { return syl_.empty(); }

    /// Sum of |exponent| over syllables.
    std::int64_t letter_length() const;
    std::int64_t exponent_sum(GeneratorId g) const;

    FreeWord inverse() const;

    /// Generators 0 and 1 print as x and y, others as g<id>.
    std::string to_string() const;

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

private:
    std::vector<Syllable> syl_;
};

FreeWord reduce_free_word(std::span<const Syllable> raw);

/// [a, b] = a b a^-1 b^-1.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

/// w_1 = x, w_{n+1} = [w_n, y^n x y^-n]. Throws std::invalid_argument for n < 1.
FreeWord w_sequence(int n);

} // namespace commlab::words
