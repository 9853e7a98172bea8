#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "commlab/algebra/free_product.hpp"

namespace commlab::algebra {

using cplx = std::complex<double>;

/// Coefficients with modulus below this are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-15;
/// Default bound on the number of words in a product's support.
inline constexpr std::size_t kDefaultSupportCap = 2'000'000;
/// Default unitarity tolerance for the length functions.
inline constexpr double kUnitaryTolerance = 1e-9;

/// Raised when a product would exceed the support cap. Never truncates.
class SupportCapExceeded : public std::runtime_error {
public:
    SupportCapExceeded(std::size_t cap, std::size_t reached);
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// Finitely supported function on a free product's normal-form words: an
/// element of the group algebra with the canonical trace (coefficient of the
/// identity word). Terms are kept in word order, which fixes the summation
/// order of every product.
class AlgebraElement {
public:
    explicit AlgebraElement(FreeProductPtr ambient);

    static AlgebraElement scalar(FreeProductPtr ambient, cplx c);
    static AlgebraElement word(FreeProductPtr ambient, GroupWord w, cplx c = 1.0);

    const FreeProductPtr& ambient() const noexcept { return ambient_; }
    const std::map<GroupWord, cplx>& terms() const noexcept { return terms_; }
    std::size_t support_size() const noexcept { return terms_.size(); }
    cplx coefficient(const GroupWord& w) const;

    /// Adds c to the coefficient of w (w must be in normal form).
    void add_term(const GroupWord& w, cplx c);

    cplx trace() const { return coefficient({}); }
    AlgebraElement star() const;
    /// sqrt(sum |c_w|^2) = trace(a* a)^{1/2}.
    double two_norm() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(cplx s, const AlgebraElement& a);

private:
    void prune();
    void require_same_ambient(const AlgebraElement& o, const char* what) const;

    FreeProductPtr ambient_;
    std::map<GroupWord, cplx> terms_;

    friend AlgebraElement multiply(const AlgebraElement&, const AlgebraElement&, std::size_t);
};

/// Convolution product. Throws std::invalid_argument on ambient mismatch and
/// SupportCapExceeded when the result support passes `cap`.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        std::size_t cap = kDefaultSupportCap);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

/// a b a* b*.
AlgebraElement group_commutator(const AlgebraElement& a, const AlgebraElement& b,
                                std::size_t cap = kDefaultSupportCap);

/// Every coefficient of a* a - 1 has modulus <= tol. Throws for tol < 0.
bool is_unitary(const AlgebraElement& a, double tol);

/// sqrt(2 - 2 Re trace(a)). Throws std::domain_error unless a is unitary
/// within kUnitaryTolerance.
double ell(const AlgebraElement& a);
/// sqrt(2 (1 - |trace(a)|)), the distance from a to the scalar circle.
double ell_bar(const AlgebraElement& a);

/// alpha*1 + i sqrt(1 - alpha^2) s for the generator s of an order-two factor.
/// Throws std::invalid_argument unless |alpha| < 1 and the factor is Z/2.
AlgebraElement order_two_unitary(const FreeProductPtr& ambient, double alpha, std::uint32_t factor);

/// The generator of an infinite-cyclic factor.
AlgebraElement haar_generator(const FreeProductPtr& ambient, std::uint32_t factor);

struct CommutatorIdentityCheck {
    cplx lhs;         // trace(u v u* v*) by expansion
    double rhs;       // 1 - (1 - alpha^2)(1 - beta^2)
    double deviation; // |lhs - rhs|
};

/// Builds u = order_two_unitary(alpha) and v = order_two_unitary(beta) on the
/// two factors of Z/2 * Z/2 and compares trace(u v u* v*) with the closed form.
CommutatorIdentityCheck verify_free_commutator_identity(double alpha, double beta);

/// Serialized term: word literal and coefficient.
struct TermRecord {
    std::string word;
    double re;
    double im;
};

std::vector<TermRecord> to_records(const AlgebraElement& a);
AlgebraElement from_records(const FreeProductPtr& ambient, const std::vector<TermRecord>& records);

/// Carrier for word substitution; the inverse is the adjoint, so only
/// unitary values give homomorphic evaluation.
struct AlgebraCarrier {
    using value_type = AlgebraElement;
    FreeProductPtr ambient;
    std::size_t cap = kDefaultSupportCap;

    value_type identity() const { return AlgebraElement::scalar(ambient, 1.0); }
    value_type multiply(const value_type& a, const value_type& b) const { return algebra::multiply(a, b, cap); }
    value_type inverse(const value_type& a) const { return a.star(); }
};

} // namespace commlab::algebra
