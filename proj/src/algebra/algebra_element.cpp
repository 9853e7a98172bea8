#include "commlab/algebra/algebra_element.hpp"

#include <cmath>

namespace commlab::algebra {

SupportCapExceeded::SupportCapExceeded(std::size_t cap, std::size_t reached)
    : std::runtime_error("algebra product support exceeded cap " + std::to_string(cap) + " (reached " +
                         std::to_string(reached) + " words)"),
      cap_(cap)
{
}

AlgebraElement::AlgebraElement(FreeProductPtr ambient) : ambient_(std::move(ambient))
{
    if (!ambient_) {
        throw std::invalid_argument("AlgebraElement: null ambient group");
    }
}

AlgebraElement AlgebraElement::scalar(FreeProductPtr ambient, cplx c)
{
    AlgebraElement a(std::move(ambient));
    a.add_term({}, c);
    return a;
}

AlgebraElement AlgebraElement::word(FreeProductPtr ambient, GroupWord w, cplx c)
{
    AlgebraElement a(std::move(ambient));
    if (!a.ambient_->is_normal_form(w)) {
        throw std::invalid_argument("AlgebraElement::word: word not in normal form");
    }
    a.add_term(w, c);
    return a;
}

cplx AlgebraElement::coefficient(const GroupWord& w) const
{
    const auto it = terms_.find(w);
    return it == terms_.end() ? cplx{} : it->second;
}

void AlgebraElement::add_term(const GroupWord& w, cplx c)
{
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
    }
    if (std::abs(it->second) < kPruneThreshold) {
        terms_.erase(it);
    }
}

void AlgebraElement::prune()
{
    std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

void AlgebraElement::require_same_ambient(const AlgebraElement& o, const char* what) const
{
    if (ambient_ != o.ambient_) {
        throw std::invalid_argument(std::string(what) + ": elements live in different group algebras");
    }
}

AlgebraElement AlgebraElement::star() const
{
    AlgebraElement out(ambient_);
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(ambient_->inverse(w), std::conj(c));
    }
    return out;
}

double AlgebraElement::two_norm() const
{
    double s = 0.0;
    for (const auto& kv : terms_) {
        s += std::norm(kv.second);
    }
    return std::sqrt(s);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    require_same_ambient(o, "sum");
    for (const auto& [w, c] : o.terms_) {
        add_term(w, c);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    require_same_ambient(o, "difference");
    for (const auto& [w, c] : o.terms_) {
        add_term(w, -c);
    }
    return *this;
}

AlgebraElement operator*(cplx s, const AlgebraElement& a)
{
    AlgebraElement out(a.ambient_);
    for (const auto& [w, c] : a.terms_) {
        out.add_term(w, s * c);
    }
    return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, std::size_t cap)
{
    a.require_same_ambient(b, "product");
    const FreeProductGroup& g = *a.ambient_;
    AlgebraElement out(a.ambient_);
    GroupWord scratch;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            scratch = wa;
            g.multiply_into(scratch, wb);
            auto [it, inserted] = out.terms_.try_emplace(scratch, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            } else if (out.terms_.size() > cap) {
                throw SupportCapExceeded(cap, out.terms_.size());
            }
        }
    }
    out.prune();
    return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    return multiply(a, b);
}

AlgebraElement group_commutator(const AlgebraElement& a, const AlgebraElement& b, std::size_t cap)
{
    return multiply(multiply(multiply(a, b, cap), a.star(), cap), b.star(), cap);
}

bool is_unitary(const AlgebraElement& a, double tol)
{
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("is_unitary: tolerance must be nonnegative");
    }
    const AlgebraElement d = multiply(a.star(), a) - AlgebraElement::scalar(a.ambient(), 1.0);
    for (const auto& kv : d.terms()) {
        if (std::abs(kv.second) > tol) {
            return false;
        }
    }
    return true;
}

namespace {
void require_unitary(const AlgebraElement& a, const char* what)
{
    if (!is_unitary(a, kUnitaryTolerance)) {
        throw std::domain_error(std::string(what) + ": argument is not unitary");
    }
}
} // namespace

double ell(const AlgebraElement& a)
{
    require_unitary(a, "ell");
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * a.trace().real()));
}

double ell_bar(const AlgebraElement& a)
{
    require_unitary(a, "ell_bar");
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - std::abs(a.trace()))));
}

AlgebraElement order_two_unitary(const FreeProductPtr& ambient, double alpha, std::uint32_t factor)
{
    if (!(std::abs(alpha) < 1.0)) {
        throw std::invalid_argument("order_two_unitary: need |alpha| < 1");
    }
    const Factor& f = ambient->factor(factor);
    if (f.is_cyclic() || f.finite->order() != 2) {
        throw std::invalid_argument("order_two_unitary: factor " + f.name + " is not Z/2");
    }
    const std::size_t s = f.finite->identity() == 0 ? 1 : 0;
    AlgebraElement u = AlgebraElement::scalar(ambient, alpha);
    u.add_term(ambient->letter(factor, static_cast<std::int64_t>(s)), cplx(0.0, std::sqrt(1.0 - alpha * alpha)));
    return u;
}

AlgebraElement haar_generator(const FreeProductPtr& ambient, std::uint32_t factor)
{
    if (!ambient->factor(factor).is_cyclic()) {
        throw std::invalid_argument("haar_generator: factor " + ambient->factor(factor).name + " is not infinite cyclic");
    }
    return AlgebraElement::word(ambient, ambient->letter(factor, 1));
}

CommutatorIdentityCheck verify_free_commutator_identity(double alpha, double beta)
{
    const auto g = z2_star_z2();
    const auto u = order_two_unitary(g, alpha, 0);
    const auto v = order_two_unitary(g, beta, 1);
    const cplx lhs = group_commutator(u, v).trace();
    const double rhs = 1.0 - (1.0 - alpha * alpha) * (1.0 - beta * beta);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

std::vector<TermRecord> to_records(const AlgebraElement& a)
{
    std::vector<TermRecord> out;
    out.reserve(a.support_size());
    for (const auto& [w, c] : a.terms()) {
        out.push_back({a.ambient()->format(w), c.real(), c.imag()});
    }
    return out;
}

AlgebraElement from_records(const FreeProductPtr& ambient, const std::vector<TermRecord>& records)
{
    AlgebraElement a(ambient);
    for (const auto& r : records) {
        a.add_term(ambient->parse(r.word), {r.re, r.im});
    }
    return a;
}

} // namespace commlab::algebra
