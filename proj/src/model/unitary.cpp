#include "commlab/model/unitary.hpp"

#include <cmath>
#include <stdexcept>

#include "commlab/util/rng.hpp"

namespace commlab::model {

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, Provenance p) : m_(std::move(m)), prov_(std::move(p))
{
    if (m_.dim() == 0) {
        throw std::invalid_argument("UnitaryMatrix: empty matrix");
    }
    const double defect = unitarity_defect(m_);
    if (!(defect <= kUnitarityTolerance)) {
        throw std::invalid_argument("UnitaryMatrix: ||U*U - I|| = " + std::to_string(defect) +
                                    " exceeds tolerance");
    }
}

namespace {

Eigen::MatrixXcd haar_eigen(std::size_t n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    const auto N = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd z(N, N);
    // Row-major fill so the stream order does not depend on Eigen's layout.
    for (Eigen::Index i = 0; i < N; ++i) {
        for (Eigen::Index j = 0; j < N; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(i, j) = {re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < N; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        const std::complex<double> phase = mag > 0.0 ? d / mag : std::complex<double>(1.0);
        q.col(j) *= phase;
    }
    return q;
}

} // namespace

UnitaryMatrix sample_haar(std::size_t n, std::uint64_t seed)
{
    if (n == 0) {
        throw std::invalid_argument("sample_haar: dimension must be positive");
    }
    return UnitaryMatrix(ComplexMatrix::from_eigen(haar_eigen(n, seed)), {"haar", seed, 0.0});
}

PrescribedTrace unitary_with_trace(double alpha, std::size_t n, std::uint64_t seed)
{
    if (n < 2) {
        throw std::invalid_argument("unitary_with_trace: dimension must be at least 2");
    }
    if (!(std::abs(alpha) <= 1.0)) {
        throw std::invalid_argument("unitary_with_trace: need |alpha| <= 1");
    }
    const auto plus = static_cast<std::size_t>(std::lround(static_cast<double>(n) * (1.0 + alpha) / 2.0));
    const double realized = (2.0 * static_cast<double>(plus) - static_cast<double>(n)) / static_cast<double>(n);
    const Provenance prov{"prescribed_trace", seed, alpha};
    if (plus == n || plus == 0) {
        ComplexMatrix m = ComplexMatrix::identity(n);
        if (plus == 0) {
            m *= -1.0;
        }
        return {UnitaryMatrix(std::move(m), prov), realized, plus};
    }
    const ComplexMatrix q = sample_haar(n, seed).matrix();
    ComplexMatrix qd = q;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = plus; j < n; ++j) {
            qd.set(i, j, -q(i, j));
        }
    }
    return {UnitaryMatrix(qd * q.adjoint(), prov), realized, plus};
}

UnitaryMatrix corner_haar(double t, std::size_t n, std::uint64_t seed)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw std::invalid_argument("corner_haar: need 0 < t < 1");
    }
    const auto k = static_cast<std::size_t>(std::lround(t * static_cast<double>(n)));
    if (k < 1 || k >= n) {
        throw std::invalid_argument("corner_haar: corner size round(t n) = " + std::to_string(k) +
                                    " must lie in [1, n)");
    }
    const ComplexMatrix corner = sample_haar(k, derive_seed(seed, 0)).matrix();
    const ComplexMatrix basis = sample_haar(n, derive_seed(seed, 1)).matrix();
    ComplexMatrix block = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            block.set(i, j, corner(i, j));
        }
    }
    return UnitaryMatrix(basis * block * basis.adjoint(), {"corner_haar", seed, t});
}

FreenessReport freeness_report(const ComplexMatrix& u, const ComplexMatrix& v)
{
    require_same_dim(u, v, "freeness_report");
    FreenessReport r{};
    r.trace_u = normalized_trace(u);
    r.trace_v = normalized_trace(v);
    const ComplexMatrix uv = u * v;
    r.trace_uv = normalized_trace(uv);
    // tau(U V U* V*) = tau((UV)(VU)*)
    r.trace_commutator = normalized_inner(uv, v * u);
    r.product_deviation = std::abs(r.trace_uv - r.trace_u * r.trace_v);
    const double rhs = 1.0 - (1.0 - std::norm(r.trace_u)) * (1.0 - std::norm(r.trace_v));
    r.commutator_deviation = std::abs(r.trace_commutator - rhs);
    return r;
}

std::vector<std::pair<double, double>> to_pairs(const ComplexMatrix& m)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out.emplace_back(m.re()[i], m.im()[i]);
    }
    return out;
}

} // namespace commlab::model
