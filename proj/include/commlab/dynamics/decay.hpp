#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commlab/algebra/algebra_element.hpp"
#include "commlab/algebra/walk_trace.hpp"
#include "commlab/linalg/complex_matrix.hpp"
#include "commlab/words/free_word.hpp"

namespace commlab::dynamics {

/// How a row's trace was obtained.
enum class TraceMethod {
    Expansion,     // full group-algebra product, cross-checked by the walk expansion
    Walk,          // walk expansion only (support too large to materialize)
    Recursion,     // scalar recursion, beyond the walk letter budget
    Matrix,        // numerical matrix model
};

std::string method_name(TraceMethod m);

struct DecayRow {
    int n;
    std::complex<double> trace;
    double ell;
    double ell_bar;
    double lower; // (1/sqrt2)^{n-1} ell_bar(u)^n
    double upper; // (sqrt2)^{n-1} ell(u)^n
    bool in_bounds;
    TraceMethod method;
    /// tau_n from tau_{n+1} = 1 - (1 - |tau_n|^2)(1 - |alpha|^2); exact model only.
    std::optional<double> recursion_trace;
};

struct DecayReport {
    std::string model;                   // "exact" or "matrix"
    double input_trace;                  // alpha, or measured tau(U)
    double ell_u;
    double ell_bar_u;
    double slack;
    std::optional<std::size_t> dimension; // matrix model
    std::optional<std::uint64_t> seed;
    std::vector<DecayRow> rows;
    /// Set when an expansion hit its cap: the last n computed by expansion.
    std::optional<int> last_expanded_n;
};

/// (1/sqrt2)^{n-1} * ell_bar^n and (sqrt2)^{n-1} * ell^n.
double lower_bound(int n, double ell_bar_u);
double upper_bound(int n, double ell_u);

/// Scalar recursion tau_1 = alpha, tau_{k+1} = 1 - (1 - tau_k^2)(1 - alpha^2).
std::vector<double> trace_recursion(double alpha, int n_max);

struct ExactOptions {
    double slack = 1e-10;
    /// Work bound (pairs of terms) for materializing w_n(u, v) by products.
    std::size_t expansion_work_limit = 50'000'000;
    std::size_t support_cap = algebra::kDefaultSupportCap;
    std::size_t walk_letter_cap = algebra::kDefaultWalkLetterCap;
};

/// ell(w_n(u, v)) for n = 1..n_max in Z/2 * Z with u = order_two_unitary(alpha)
/// and v the Haar generator. Throws std::invalid_argument unless |alpha| < 1
/// and n_max >= 1.
DecayReport decay_curve_exact(double alpha, int n_max, const ExactOptions& opts = {});

/// Same curve in a matrix model: W_1 = U, W_{n+1} = [W_n, V^n U V^-n], with
/// the conjugates updated incrementally. Throws on dimension mismatch or
/// n_max < 1.
DecayReport decay_curve_matrix(const ComplexMatrix& u, const ComplexMatrix& v, int n_max, double slack = 0.05);

struct SmallElement {
    int n;
    words::FreeWord word;
    double ell;
    std::complex<double> trace;
};

/// Least n with ell(w_n(u, v)) < epsilon in the exact model. Requires
/// alpha > 3/4 (so ell(u) < 1/sqrt2) and epsilon > 0; throws
/// std::invalid_argument otherwise and std::length_error if the walk letter
/// budget runs out first.
SmallElement find_small_element(double alpha, double epsilon,
                                 std::size_t walk_letter_cap = algebra::kDefaultWalkLetterCap);

/// ell and ell_bar of a unitary from its trace.
double ell_of_trace(std::complex<double> tau);
double ell_bar_of_trace(std::complex<double> tau);

} // namespace commlab::dynamics
