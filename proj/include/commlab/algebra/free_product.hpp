#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "commlab/words/finite_group.hpp"

namespace commlab::algebra {

/// One factor of a free product: a finite group, or infinite cyclic when
/// `finite` is null.
struct Factor {
    std::string name;
    words::FiniteGroupPtr finite;

    bool is_cyclic() const noexcept { return !finite; }
};

/// A syllable of a normal-form word: a non-identity element of one factor.
/// For finite factors `value` is the element index, for cyclic factors the
/// nonzero exponent of the generator.
struct Letter {
    std::uint32_t factor;
    std::int32_t value;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Normal-form word: adjacent letters come from different factors.
using GroupWord = std::vector<Letter>;

class FreeProductGroup {
public:
    /// Factor names must be distinct and free of ' ', ':', '^'.
    explicit FreeProductGroup(std::vector<Factor> factors);

    std::size_t factor_count() const noexcept { return factors_.size(); }
    const Factor& factor(std::size_t i) const { return factors_.at(i); }

    /// Word of one letter; identity values give the empty word.
    GroupWord letter(std::uint32_t factor, std::int64_t value) const;

    GroupWord multiply(const GroupWord& a, const GroupWord& b) const;
    /// Appends b to a in place, reducing at the junction.
    void multiply_into(GroupWord& a, const GroupWord& b) const;
    GroupWord inverse(const GroupWord& w) const;
    bool is_normal_form(const GroupWord& w) const;

    /// "1" for the identity; otherwise space-separated syllables "name:label"
    /// (finite factors) or "name^e" / "name" (cyclic factors).
    std::string format(const GroupWord& w) const;
    GroupWord parse(std::string_view literal) const;

private:
    /// Product of two letters of the same factor; value 0 / identity means cancelled.
    std::int64_t combine(std::uint32_t factor, std::int32_t a, std::int32_t b) const;
    bool is_identity_value(std::uint32_t factor, std::int64_t v) const;

    std::vector<Factor> factors_;
};

using FreeProductPtr = std::shared_ptr<const FreeProductGroup>;

/// Z/2 * Z/2 with factors "a", "b".
FreeProductPtr z2_star_z2();
/// Z/2 * Z with factors "s" (order two) and "v" (infinite cyclic).
FreeProductPtr z2_star_z();
/// F_2 = Z * Z with factors "x", "y".
FreeProductPtr free_group_f2();

} // namespace commlab::algebra
