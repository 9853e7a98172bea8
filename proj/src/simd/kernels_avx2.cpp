#include "commlab/simd/kernels.hpp"

#include <algorithm>
#include <immintrin.h>

// Compiled with -mavx2 only (no -mfma): each lane performs exactly the
// multiply/add sequence of the scalar reference.

namespace commlab::simd {

namespace {

constexpr std::size_t kBlockK = 64;

void gemm_rows_avx2(PlanarConst a, PlanarConst b, Planar c, std::size_t n,
                    std::size_t row_begin, std::size_t row_end)
{
    for (std::size_t i = row_begin; i < row_end; ++i) {
        std::fill_n(c.re + i * n, n, 0.0);
        std::fill_n(c.im + i * n, n, 0.0);
    }
    const std::size_t nv = n & ~std::size_t{3};
    for (std::size_t kb = 0; kb < n; kb += kBlockK) {
        const std::size_t ke = std::min(n, kb + kBlockK);
        for (std::size_t i = row_begin; i < row_end; ++i) {
            double* cr = c.re + i * n;
            double* ci = c.im + i * n;
            for (std::size_t k = kb; k < ke; ++k) {
                const double ar = a.re[i * n + k];
                const double ai = a.im[i * n + k];
                const __m256d var = _mm256_set1_pd(ar);
                const __m256d vai = _mm256_set1_pd(ai);
                const double* br = b.re + k * n;
                const double* bi = b.im + k * n;
                std::size_t j = 0;
                for (; j < nv; j += 4) {
                    const __m256d vbr = _mm256_loadu_pd(br + j);
                    const __m256d vbi = _mm256_loadu_pd(bi + j);
                    const __m256d pr =
                        _mm256_sub_pd(_mm256_mul_pd(var, vbr), _mm256_mul_pd(vai, vbi));
                    const __m256d pi =
                        _mm256_add_pd(_mm256_mul_pd(var, vbi), _mm256_mul_pd(vai, vbr));
                    _mm256_storeu_pd(cr + j, _mm256_add_pd(_mm256_loadu_pd(cr + j), pr));
                    _mm256_storeu_pd(ci + j, _mm256_add_pd(_mm256_loadu_pd(ci + j), pi));
                }
                for (; j < n; ++j) {
                    const double pr = ar * br[j] - ai * bi[j];
                    const double pi = ar * bi[j] + ai * br[j];
                    cr[j] = cr[j] + pr;
                    ci[j] = ci[j] + pi;
                }
            }
        }
    }
}

std::complex<double> dot_conj_avx2(PlanarConst a, PlanarConst b, std::size_t len)
{
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const std::size_t nv = len & ~std::size_t{3};
    std::size_t i = 0;
    for (; i < nv; i += 4) {
        const __m256d ar = _mm256_loadu_pd(a.re + i);
        const __m256d ai = _mm256_loadu_pd(a.im + i);
        const __m256d br = _mm256_loadu_pd(b.re + i);
        const __m256d bi = _mm256_loadu_pd(b.im + i);
        acc_re = _mm256_add_pd(
            acc_re, _mm256_add_pd(_mm256_mul_pd(ar, br), _mm256_mul_pd(ai, bi)));
        acc_im = _mm256_add_pd(
            acc_im, _mm256_sub_pd(_mm256_mul_pd(ai, br), _mm256_mul_pd(ar, bi)));
    }
    alignas(32) double lre[4];
    alignas(32) double lim[4];
    _mm256_store_pd(lre, acc_re);
    _mm256_store_pd(lim, acc_im);
    for (; i < len; ++i) {
        const std::size_t lane = i & 3u;
        lre[lane] = lre[lane] + (a.re[i] * b.re[i] + a.im[i] * b.im[i]);
        lim[lane] = lim[lane] + (a.im[i] * b.re[i] - a.re[i] * b.im[i]);
    }
    return {(lre[0] + lre[1]) + (lre[2] + lre[3]), (lim[0] + lim[1]) + (lim[2] + lim[3])};
}

double diff_norm2_avx2(PlanarConst a, PlanarConst b, std::size_t len)
{
    __m256d acc = _mm256_setzero_pd();
    const std::size_t nv = len & ~std::size_t{3};
    std::size_t i = 0;
    for (; i < nv; i += 4) {
        const __m256d dr = _mm256_sub_pd(_mm256_loadu_pd(a.re + i), _mm256_loadu_pd(b.re + i));
        const __m256d di = _mm256_sub_pd(_mm256_loadu_pd(a.im + i), _mm256_loadu_pd(b.im + i));
        acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (; i < len; ++i) {
        const double dr = a.re[i] - b.re[i];
        const double di = a.im[i] - b.im[i];
        lanes[i & 3u] = lanes[i & 3u] + (dr * dr + di * di);
    }
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

} // namespace

const KernelTable& avx2_kernels()
{
    static const KernelTable table{Isa::Avx2, &gemm_rows_avx2, &dot_conj_avx2,
                                   &diff_norm2_avx2};
    return table;
}

} // namespace commlab::simd
