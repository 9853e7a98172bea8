#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "commlab/words/finite_group.hpp"
#include "commlab/words/free_word.hpp"

namespace commlab::words {

/// Something words can be evaluated in: an identity, a product and an inverse.
/// Carriers for unitaries supply the adjoint as the inverse.
template <class C>
concept GroupCarrier = requires(const C& c, const typename C::value_type& a) {
    { c.identity() } -> std::convertible_to<typename C::value_type>;
    { c.multiply(a, a) } -> std::convertible_to<typename C::value_type>;
    { c.inverse(a) } -> std::convertible_to<typename C::value_type>;
};

template <class C>
concept EqualityCarrier = GroupCarrier<C> && requires(const C& c, const typename C::value_type& a) {
    { c.equal(a, a) } -> std::convertible_to<bool>;
};

template <GroupCarrier C>
typename C::value_type power(const C& c, const typename C::value_type& a, std::int64_t e)
{
    using V = typename C::value_type;
    if (e == 0) {
        return c.identity();
    }
    V base = e < 0 ? c.inverse(a) : a;
    auto k = static_cast<std::uint64_t>(e < 0 ? -(e + 1) : e) + (e < 0 ? 1u : 0u);
    std::optional<V> acc;
    while (k) {
        if (k & 1u) {
            acc = acc ? c.multiply(*acc, base) : base;
        }
        k >>= 1u;
        if (k) {
            base = c.multiply(base, base);
        }
    }
    return *acc;
}

/// Evaluate an unreduced syllable list left to right.
template <GroupCarrier C>
typename C::value_type evaluate_syllables(std::span<const Syllable> raw,
                                          const std::map<GeneratorId, typename C::value_type>& assignment,
                                          const C& c)
{
    std::optional<typename C::value_type> acc;
    for (const Syllable& s : raw) {
        auto it = assignment.find(s.gen);
        if (it == assignment.end()) {
            throw std::invalid_argument("substitute: no value assigned to generator " + std::to_string(s.gen));
        }
        if (s.exp == 0) {
            continue;
        }
        auto p = power(c, it->second, s.exp);
        acc = acc ? c.multiply(*acc, p) : std::move(p);
    }
    return acc ? *acc : c.identity();
}

/// Homomorphic evaluation w(assignment). Throws std::invalid_argument when a
/// generator of w has no assigned value.
template <GroupCarrier C>
typename C::value_type substitute(const FreeWord& w,
                                  const std::map<GeneratorId, typename C::value_type>& assignment,
                                  const C& c)
{
    return evaluate_syllables(std::span<const Syllable>(w.syllables()), assignment, c);
}

struct FiniteGroupCarrier {
    using value_type = FiniteGroup::Element;
    const FiniteGroup& group;

    value_type identity() const { return group.identity(); }
    value_type multiply(value_type a, value_type b) const { return group.multiply(a, b); }
    value_type inverse(value_type a) const { return group.inverse(a); }
    bool equal(value_type a, value_type b) const { return a == b; }
};

struct FreeWordCarrier {
    using value_type = FreeWord;

    value_type identity() const { return {}; }
    value_type multiply(const value_type& a, const value_type& b) const { return a * b; }
    value_type inverse(const value_type& a) const { return a.inverse(); }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
};

/// One factor s_i g^{e_i} of an alternating product.
template <class V>
struct FreenessConstraint {
    V coefficient;
    std::int64_t exponent;
};

/// Least position p in `candidates` such that
/// s_1 g^{e_1} s_2 g^{e_2} ... s_k g^{e_k} != 1 for g = candidates[p];
/// nullopt if every candidate satisfies the relation. Throws
/// std::invalid_argument on an empty constraint list or a zero exponent.
template <EqualityCarrier C>
std::optional<std::size_t> asymptotic_freeness_witness(
    std::span<const FreenessConstraint<typename C::value_type>> constraints,
    std::span<const typename C::value_type> candidates, const C& c)
{
    if (constraints.empty()) {
        throw std::invalid_argument("asymptotic_freeness_witness: empty constraint list");
    }
    for (const auto& k : constraints) {
        if (k.exponent == 0) {
            throw std::invalid_argument("asymptotic_freeness_witness: zero exponent");
        }
    }
    const auto one = c.identity();
    for (std::size_t p = 0; p < candidates.size(); ++p) {
        auto acc = c.identity();
        for (const auto& k : constraints) {
            acc = c.multiply(c.multiply(acc, k.coefficient), power(c, candidates[p], k.exponent));
        }
        if (!c.equal(acc, one)) {
            return p;
        }
    }
    return std::nullopt;
}

} // namespace commlab::words
