#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commlab::words {

/// A finite group given by its multiplication table. Elements are indices
/// 0..order-1; the identity is found from the table.
class FiniteGroup {
public:
    using Element = std::size_t;

    /// `table` is the flattened order x order product table, table[a*n+b] = ab.
    /// Validates that rows and columns are permutations, that an identity
    /// exists, and associativity: exhaustively up to order 64, on 10*n^2
    /// deterministic random triples above. Throws std::invalid_argument.
    FiniteGroup(std::vector<std::string> labels, std::vector<Element> table, std::string name = {});

    /// Parse the text format:
    ///
    ///     name Sym3            (optional)
    ///     order 6
    ///     labels () (12) (13) (23) (123) (132)
    ///     table
    ///     0 1 2 3 4 5
    ///     ...                  (order^2 indices, any whitespace)
    ///
    /// Lines starting with '#' are comments.
    static FiniteGroup parse(std::string_view text);
    static FiniteGroup load(const std::string& path);
    std::string serialize() const;

    std::size_t order() const noexcept { return n_; }
    Element identity() const noexcept { return identity_; }
    Element multiply(Element a, Element b) const { return table_[a * n_ + b]; }
    Element inverse(Element a) const { return inverse_[a]; }
    Element power(Element a, long long e) const;

    const std::string& label(Element a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Element> find(std::string_view label) const;
    const std::string& name() const noexcept { return name_; }

    std::size_t element_order(Element a) const;
    /// Least common multiple of element orders.
    std::size_t exponent() const;
    bool is_abelian() const;

    const std::vector<Element>& table() const noexcept { return table_; }

private:
    std::size_t n_;
    std::vector<std::string> labels_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    Element identity_ = 0;
    std::string name_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

/// Permutation of {0..m-1}; p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

namespace groups {

FiniteGroupPtr cyclic(std::size_t n);
/// Sym(3) with elements ordered (), (12), (13), (23), (123), (132).
FiniteGroupPtr symmetric3();
/// Quaternion group Q8: 1, -1, i, -i, j, -j, k, -k.
FiniteGroupPtr quaternion();
FiniteGroupPtr dihedral(std::size_t n);
FiniteGroupPtr klein_four();
FiniteGroupPtr alternating4();
/// Alt(5), enumerated breadth-first from a = (12)(34), b = (135).
FiniteGroupPtr alternating5();

/// Closure of permutation generators, breadth-first in generator order, with
/// product (gh)(x) = g(h(x)) and cycle-notation labels on points 1..m.
FiniteGroupPtr from_permutation_generators(const std::vector<Permutation>& gens, std::string name);

/// The groups exercised by the mixed-identity checks.
std::vector<FiniteGroupPtr> test_catalog();

} // namespace groups

} // namespace commlab::words
