#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "commlab/words/finite_group.hpp"

namespace commlab::words {

/// Power t^e of the free variable.
struct TPower {
    std::int64_t exp;
};

using MixedToken = std::variant<FiniteGroup::Element, TPower>;

/// Word g_0 t^{e_1} g_1 ... t^{e_k} g_k in Z * G in free-product normal form:
/// every e_i is nonzero and interior coefficients g_1..g_{k-1} are not the
/// identity. g_0 and g_k may be the identity.
class MixedWord {
public:
    /// Normalizes an arbitrary token sequence; adjacent coefficients multiply,
    /// adjacent t-powers add, cancellations cascade.
    MixedWord(FiniteGroupPtr group, std::span<const MixedToken> tokens);

    static MixedWord identity(FiniteGroupPtr group);
    static MixedWord variable(FiniteGroupPtr group, std::int64_t exp = 1);
    static MixedWord constant(FiniteGroupPtr group, FiniteGroup::Element g);

    /// Literal syntax "g0 . t^e1 . g1 . ...": tokens separated by '.', each a
    /// group label, "t", or "t^e". Throws std::invalid_argument.
    static MixedWord parse(FiniteGroupPtr group, std::string_view literal);
    std::string to_string() const;

    const FiniteGroup& group() const noexcept { return *group_; }
    const FiniteGroupPtr& group_ptr() const noexcept { return group_; }
    const std::vector<FiniteGroup::Element>& coefficients() const noexcept { return coeff_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return exps_; }

    /// Number of t-syllables k.
    std::size_t syllable_count() const noexcept { return exps_.size(); }
    /// Sum of |e_i|.
    std::int64_t t_length() const;
    /// Identity of Z * G.
    bool is_trivial() const;

    FiniteGroup::Element evaluate(FiniteGroup::Element t) const;

    MixedWord inverse() const;
    friend MixedWord operator*(const MixedWord& a, const MixedWord& b);
    friend bool operator==(const MixedWord& a, const MixedWord& b);

private:
    MixedWord(FiniteGroupPtr group) : group_(std::move(group)) {}
    std::vector<MixedToken> tokens() const;

    FiniteGroupPtr group_;
    std::vector<FiniteGroup::Element> coeff_;
    std::vector<std::int64_t> exps_;
};

MixedWord commutator(const MixedWord& a, const MixedWord& b);

/// Right-nested [w_1, [w_2, ... [w_{l-1}, w_l]]]. Throws on an empty list or
/// words over different groups.
MixedWord iterated_commutator(std::span<const MixedWord> ws);

struct MixedIdentityVerdict {
    bool is_identity;
    /// First element (ascending index) with w(g) != 1, when not an identity.
    std::optional<FiniteGroup::Element> witness;
    /// w(witness).
    std::optional<FiniteGroup::Element> value;
};

/// Checks w(g) = 1 for every g in G. Throws std::invalid_argument if w is over
/// a different group object.
MixedIdentityVerdict is_mixed_identity(const MixedWord& w, const FiniteGroup& g);

/// Visits nontrivial words g_0 = 1, t^{e_1} g_1 ... t^{e_k} g_k with
/// sum |e_i| <= max_t_length, in a fixed order (k ascending, then exponent
/// patterns, then coefficient indices). Words with g_0 != 1 are conjugate to
/// one of these, and conjugation preserves being a mixed identity.
/// Returns the number of words visited; the visitor may return false to stop.
std::size_t enumerate_mixed_words(const FiniteGroupPtr& group, std::int64_t max_t_length,
                                  const std::function<bool(const MixedWord&)>& visit);

} // namespace commlab::words
