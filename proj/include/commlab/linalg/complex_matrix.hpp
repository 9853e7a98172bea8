#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "commlab/simd/kernels.hpp"

namespace commlab {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major, stored as separate real and
/// imaginary planes so that the kernels in commlab::simd can stream them.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), re_(n * n, 0.0), im_(n * n, 0.0) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const cplx> d);
    /// Rows of equal length n; throws std::invalid_argument otherwise.
    static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);
    static ComplexMatrix from_eigen(const Eigen::MatrixXcd& m);

    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ * n_; }

    cplx operator()(std::size_t i, std::size_t j) const { return {re_[i * n_ + j], im_[i * n_ + j]}; }
    void set(std::size_t i, std::size_t j, cplx v)
    {
        re_[i * n_ + j] = v.real();
        im_[i * n_ + j] = v.imag();
    }

    std::span<const double> re() const noexcept { return re_; }
    std::span<const double> im() const noexcept { return im_; }
    std::span<double> re() noexcept { return re_; }
    std::span<double> im() noexcept { return im_; }

    simd::PlanarConst planar() const noexcept { return {re_.data(), im_.data()}; }
    simd::Planar planar() noexcept { return {re_.data(), im_.data()}; }

    ComplexMatrix adjoint() const;
    Eigen::MatrixXcd to_eigen() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> re_;
    std::vector<double> im_;
};

/// Matrix product through the active SIMD kernel; rows are split across
/// worker threads for large n. The result does not depend on the thread count.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

/// Product with an explicit kernel table (equivalence tests).
ComplexMatrix multiply_with(const simd::KernelTable& k, const ComplexMatrix& a,
                            const ComplexMatrix& b);

/// Group commutator a b a* b* (a, b unitary).
ComplexMatrix group_commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// (1/N) * trace.
cplx normalized_trace(const ComplexMatrix& a);

/// (1/N) tr(a b*) without forming the product.
cplx normalized_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt((1/N) tr((a-b)*(a-b))).
double two_norm_dist(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

/// Largest singular value. Exact SVD up to dimension 64, power iteration on
/// a* a (relative tolerance 1e-12) above.
double op_norm(const ComplexMatrix& a);

/// ||u* u - I||_op.
double unitarity_defect(const ComplexMatrix& u);

/// Operator-norm distance ||a - b||_op.
double op_dist(const ComplexMatrix& a, const ComplexMatrix& b);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

} // namespace commlab
