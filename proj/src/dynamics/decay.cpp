#include "commlab/dynamics/decay.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace commlab::dynamics {

using algebra::AlgebraElement;

std::string method_name(TraceMethod m)
{
    switch (m) {
    case TraceMethod::Expansion:
        return "expansion";
    case TraceMethod::Walk:
        return "walk";
    case TraceMethod::Recursion:
        return "recursion-extrapolated";
    case TraceMethod::Matrix:
        return "matrix";
    }
    return "unknown";
}

double ell_of_trace(std::complex<double> tau)
{
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * tau.real()));
}

double ell_bar_of_trace(std::complex<double> tau)
{
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - std::abs(tau))));
}

double lower_bound(int n, double ell_bar_u)
{
    return std::pow(1.0 / std::numbers::sqrt2, n - 1) * std::pow(ell_bar_u, n);
}

double upper_bound(int n, double ell_u)
{
    return std::pow(std::numbers::sqrt2, n - 1) * std::pow(ell_u, n);
}

std::vector<double> trace_recursion(double alpha, int n_max)
{
    std::vector<double> out;
    double tau = alpha;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(tau);
        tau = 1.0 - (1.0 - tau * tau) * (1.0 - alpha * alpha);
    }
    return out;
}

namespace {

DecayRow make_row(int n, std::complex<double> tau, double ell_u, double ell_bar_u, double slack, TraceMethod m)
{
    DecayRow r{};
    r.n = n;
    r.trace = tau;
    r.ell = ell_of_trace(tau);
    r.ell_bar = ell_bar_of_trace(tau);
    r.lower = lower_bound(n, ell_bar_u);
    r.upper = upper_bound(n, ell_u);
    r.in_bounds = r.lower - slack <= r.ell && r.ell <= r.upper + slack;
    r.method = m;
    return r;
}

// v^k u v^-k
AlgebraElement conjugate_by_power(const AlgebraElement& u, int k)
{
    const auto& g = u.ambient();
    return AlgebraElement::word(g, g->letter(1, k)) * u * AlgebraElement::word(g, g->letter(1, -k));
}

} // namespace

DecayReport decay_curve_exact(double alpha, int n_max, const ExactOptions& opts)
{
    if (!(std::abs(alpha) < 1.0)) {
        throw std::invalid_argument("decay_curve_exact: need |alpha| < 1");
    }
    if (n_max < 1) {
        throw std::invalid_argument("decay_curve_exact: n_max must be at least 1");
    }
    const auto g = algebra::z2_star_z();
    const AlgebraElement u = algebra::order_two_unitary(g, alpha, 0);
    const std::complex<double> a = alpha;
    const std::complex<double> b{0.0, std::sqrt(1.0 - alpha * alpha)};

    DecayReport rep;
    rep.model = "exact";
    rep.input_trace = alpha;
    rep.ell_u = ell_of_trace(alpha);
    rep.ell_bar_u = ell_bar_of_trace(alpha);
    rep.slack = opts.slack;

    const auto rec = trace_recursion(alpha, n_max);
    std::optional<AlgebraElement> w = u;
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1 && w) {
            const AlgebraElement c = conjugate_by_power(u, n - 1);
            const std::size_t s = w->support_size();
            const std::size_t work = 2 * s * c.support_size() * s;
            if (work > opts.expansion_work_limit) {
                w.reset();
            } else {
                try {
                    w = algebra::group_commutator(*w, c, opts.support_cap);
                } catch (const algebra::SupportCapExceeded&) {
                    w.reset();
                }
            }
            if (!w) {
                rep.last_expanded_n = n - 1;
            }
        }
        const words::FreeWord wn = words::w_sequence(n);
        std::optional<std::complex<double>> walk;
        if (algebra::walk_letter_count(wn) <= opts.walk_letter_cap) {
            walk = algebra::exact_word_trace(wn, a, b, opts.walk_letter_cap);
        }
        DecayRow row;
        if (w) {
            const std::complex<double> tau = w->trace();
            if (walk && std::abs(*walk - tau) > 1e-10) {
                throw std::logic_error("decay_curve_exact: expansion and walk traces disagree at n = " +
                                       std::to_string(n));
            }
            row = make_row(n, tau, rep.ell_u, rep.ell_bar_u, opts.slack, TraceMethod::Expansion);
        } else if (walk) {
            row = make_row(n, *walk, rep.ell_u, rep.ell_bar_u, opts.slack, TraceMethod::Walk);
        } else {
            row = make_row(n, rec[static_cast<std::size_t>(n - 1)], rep.ell_u, rep.ell_bar_u, opts.slack,
                           TraceMethod::Recursion);
        }
        row.recursion_trace = rec[static_cast<std::size_t>(n - 1)];
        rep.rows.push_back(row);
    }
    return rep;
}

DecayReport decay_curve_matrix(const ComplexMatrix& u, const ComplexMatrix& v, int n_max, double slack)
{
    require_same_dim(u, v, "decay_curve_matrix");
    if (n_max < 1) {
        throw std::invalid_argument("decay_curve_matrix: n_max must be at least 1");
    }
    DecayReport rep;
    rep.model = "matrix";
    const std::complex<double> tau_u = normalized_trace(u);
    rep.input_trace = tau_u.real();
    rep.ell_u = ell_of_trace(tau_u);
    rep.ell_bar_u = ell_bar_of_trace(tau_u);
    rep.slack = slack;
    rep.dimension = u.dim();

    const ComplexMatrix v_adj = v.adjoint();
    ComplexMatrix w = u;
    ComplexMatrix conj = v * u * v_adj;
    for (int n = 1; n <= n_max; ++n) {
        rep.rows.push_back(make_row(n, normalized_trace(w), rep.ell_u, rep.ell_bar_u, slack, TraceMethod::Matrix));
        if (n < n_max) {
            w = group_commutator(w, conj);
            conj = v * conj * v_adj;
        }
    }
    return rep;
}

SmallElement find_small_element(double alpha, double epsilon, std::size_t walk_letter_cap)
{
    if (!(alpha > 0.75 && alpha < 1.0)) {
        throw std::invalid_argument("find_small_element: need 3/4 < alpha < 1 so that ell(u) < 1/sqrt(2)");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("find_small_element: epsilon must be positive");
    }
    const std::complex<double> a = alpha;
    const std::complex<double> b{0.0, std::sqrt(1.0 - alpha * alpha)};
    for (int n = 1;; ++n) {
        words::FreeWord wn = words::w_sequence(n);
        const auto tau = algebra::exact_word_trace(wn, a, b, walk_letter_cap);
        const double l = ell_of_trace(tau);
        if (l < epsilon) {
            return {n, std::move(wn), l, tau};
        }
    }
}

} // namespace commlab::dynamics
