#include "commlab/simd/kernels.hpp"

#include <algorithm>

namespace commlab::simd {

namespace {

constexpr std::size_t kBlockK = 64;

void gemm_rows_scalar(PlanarConst a, PlanarConst b, Planar c, std::size_t n,
                      std::size_t row_begin, std::size_t row_end)
{
    for (std::size_t i = row_begin; i < row_end; ++i) {
        std::fill_n(c.re + i * n, n, 0.0);
        std::fill_n(c.im + i * n, n, 0.0);
    }
    for (std::size_t kb = 0; kb < n; kb += kBlockK) {
        const std::size_t ke = std::min(n, kb + kBlockK);
        for (std::size_t i = row_begin; i < row_end; ++i) {
            double* cr = c.re + i * n;
            double* ci = c.im + i * n;
            for (std::size_t k = kb; k < ke; ++k) {
                const double ar = a.re[i * n + k];
                const double ai = a.im[i * n + k];
                const double* br = b.re + k * n;
                const double* bi = b.im + k * n;
                for (std::size_t j = 0; j < n; ++j) {
                    const double pr = ar * br[j] - ai * bi[j];
                    const double pi = ar * bi[j] + ai * br[j];
                    cr[j] = cr[j] + pr;
                    ci[j] = ci[j] + pi;
                }
            }
        }
    }
}

std::complex<double> dot_conj_scalar(PlanarConst a, PlanarConst b, std::size_t len)
{
    double acc_re[4] = {0.0, 0.0, 0.0, 0.0};
    double acc_im[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t lane = i & 3u;
        acc_re[lane] = acc_re[lane] + (a.re[i] * b.re[i] + a.im[i] * b.im[i]);
        acc_im[lane] = acc_im[lane] + (a.im[i] * b.re[i] - a.re[i] * b.im[i]);
    }
    return {(acc_re[0] + acc_re[1]) + (acc_re[2] + acc_re[3]),
            (acc_im[0] + acc_im[1]) + (acc_im[2] + acc_im[3])};
}

double diff_norm2_scalar(PlanarConst a, PlanarConst b, std::size_t len)
{
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < len; ++i) {
        const double dr = a.re[i] - b.re[i];
        const double di = a.im[i] - b.im[i];
        acc[i & 3u] = acc[i & 3u] + (dr * dr + di * di);
    }
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

} // namespace

const KernelTable& scalar_kernels()
{
    static const KernelTable table{Isa::Scalar, &gemm_rows_scalar, &dot_conj_scalar,
                                   &diff_norm2_scalar};
    return table;
}

} // namespace commlab::simd
