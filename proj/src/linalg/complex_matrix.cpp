#include "commlab/linalg/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "commlab/util/parallel.hpp"
#include "commlab/util/rng.hpp"

namespace commlab {

namespace {

constexpr std::size_t kSvdLimit = 64;
constexpr std::size_t kParallelRowsFrom = 128;

void check_square_rows(const std::vector<std::vector<cplx>>& rows)
{
    for (const auto& r : rows) {
        if (r.size() != rows.size()) {
            throw std::invalid_argument("matrix rows must have length " + std::to_string(rows.size()));
        }
    }
}

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x)
{
    const std::size_t n = a.dim();
    std::vector<cplx> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += a(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

double vec_norm(const std::vector<cplx>& x)
{
    double s = 0.0;
    for (const auto& v : x) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double op_norm_power(const ComplexMatrix& a)
{
    const std::size_t n = a.dim();
    const ComplexMatrix ah = a.adjoint();
    SplitMix64 rng(0x5eed0f0b5eedULL);
    std::vector<cplx> x(n);
    for (auto& v : x) {
        v = {rng.normal(), rng.normal()};
    }
    double nx = vec_norm(x);
    for (auto& v : x) {
        v /= nx;
    }
    double sigma = 0.0;
    for (int it = 0; it < 20000; ++it) {
        const auto y = matvec(a, x);
        const double s_new = vec_norm(y);
        auto z = matvec(ah, y);
        const double nz = vec_norm(z);
        if (nz == 0.0) {
            return s_new;
        }
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = z[i] / nz;
        }
        if (std::abs(s_new - sigma) <= 1e-12 * s_new) {
            return s_new;
        }
        sigma = s_new;
    }
    return sigma;
}

} // namespace

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.re_[i * n + i] = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d)
{
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m.set(i, i, d[i]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>>& rows)
{
    check_square_rows(rows);
    ComplexMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_eigen(const Eigen::MatrixXcd& e)
{
    if (e.rows() != e.cols()) {
        throw std::invalid_argument("from_eigen: matrix is not square");
    }
    ComplexMatrix m(static_cast<std::size_t>(e.rows()));
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
        for (Eigen::Index j = 0; j < e.cols(); ++j) {
            m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), e(i, j));
        }
    }
    return m;
}

Eigen::MatrixXcd ComplexMatrix::to_eigen() const
{
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j);
        }
    }
    return e;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            m.re_[j * n_ + i] = re_[i * n_ + j];
            m.im_[j * n_ + i] = -im_[i * n_ + j];
        }
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o)
{
    require_same_dim(*this, o, "matrix sum");
    for (std::size_t i = 0; i < re_.size(); ++i) {
        re_[i] += o.re_[i];
        im_[i] += o.im_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o)
{
    require_same_dim(*this, o, "matrix difference");
    for (std::size_t i = 0; i < re_.size(); ++i) {
        re_[i] -= o.re_[i];
        im_[i] -= o.im_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s)
{
    for (std::size_t i = 0; i < re_.size(); ++i) {
        const double r = re_[i];
        const double m = im_[i];
        re_[i] = s.real() * r - s.imag() * m;
        im_[i] = s.real() * m + s.imag() * r;
    }
    return *this;
}

ComplexMatrix multiply_with(const simd::KernelTable& k, const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    const auto pa = a.planar();
    const auto pb = b.planar();
    const auto pc = c.planar();
    if (n < kParallelRowsFrom) {
        k.gemm_rows(pa, pb, pc, n, 0, n);
    } else {
        parallel_for(n, [&](std::size_t r0, std::size_t r1) { k.gemm_rows(pa, pb, pc, n, r0, r1); });
    }
    return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return multiply_with(simd::kernels(), a, b);
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b)
{
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b)
{
    a -= b;
    return a;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a)
{
    a *= s;
    return a;
}

ComplexMatrix group_commutator(const ComplexMatrix& a, const ComplexMatrix& b)
{
    // a b a* b* = (a b) (b a)*
    return (a * b) * (b * a).adjoint();
}

cplx normalized_trace(const ComplexMatrix& a)
{
    const std::size_t n = a.dim();
    if (n == 0) {
        throw std::invalid_argument("normalized_trace: empty matrix");
    }
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sr += a.re()[i * n + i];
        si += a.im()[i * n + i];
    }
    return {sr / static_cast<double>(n), si / static_cast<double>(n)};
}

cplx normalized_inner(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "normalized_inner");
    return simd::kernels().dot_conj(a.planar(), b.planar(), a.size()) / static_cast<double>(a.dim());
}

double two_norm_dist(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "two_norm_dist");
    return std::sqrt(simd::kernels().diff_norm2(a.planar(), b.planar(), a.size()) /
                     static_cast<double>(a.dim()));
}

double frobenius_norm(const ComplexMatrix& a)
{
    return std::sqrt(simd::kernels().dot_conj(a.planar(), a.planar(), a.size()).real());
}

double op_norm(const ComplexMatrix& a)
{
    if (a.dim() == 0) {
        return 0.0;
    }
    if (a.dim() <= kSvdLimit) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.to_eigen());
        return svd.singularValues()(0);
    }
    return op_norm_power(a);
}

double unitarity_defect(const ComplexMatrix& u)
{
    const ComplexMatrix d = u.adjoint() * u - ComplexMatrix::identity(u.dim());
    // ||X||_op <= ||X||_F; skip the expensive norm when the bound is already tiny.
    const double fro = frobenius_norm(d);
    if (u.dim() > kSvdLimit && fro <= 1e-12) {
        return fro;
    }
    return op_norm(d);
}

double op_dist(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "op_dist");
    return op_norm(a - b);
}

} // namespace commlab
