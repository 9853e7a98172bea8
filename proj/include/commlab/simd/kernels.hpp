#pragma once

// Complex arithmetic kernels on planar (split real/imaginary) row-major data.
//
// Every kernel has a scalar reference implementation and optional SIMD
// variants. All variants perform the same floating-point operations in the
// same order per output element, so their results are bit-identical; the
// equivalence tests rely on this.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace commlab::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Planar view of an n x n block of complex numbers.
struct PlanarConst {
    const double* re;
    const double* im;
};
struct Planar {
    double* re;
    double* im;
};

/// Kernel entry points for one instruction set.
struct KernelTable {
    Isa isa;

    /// C[rows) = A[rows) * B for square n x n row-major matrices. C rows in
    /// [row_begin, row_end) are overwritten.
    void (*gemm_rows)(PlanarConst a, PlanarConst b, Planar c, std::size_t n,
                      std::size_t row_begin, std::size_t row_end);

    /// sum_i a_i * conj(b_i), accumulated in four interleaved lanes.
    std::complex<double> (*dot_conj)(PlanarConst a, PlanarConst b, std::size_t len);

    /// sum_i |a_i - b_i|^2, same lane structure as dot_conj.
    double (*diff_norm2)(PlanarConst a, PlanarConst b, std::size_t len);
};

const KernelTable& scalar_kernels();
#if defined(COMMLAB_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

/// Instruction sets compiled in and supported by the running CPU.
std::vector<Isa> available_isas();

/// Kernel table for a specific ISA; throws if it is unavailable.
const KernelTable& kernels_for(Isa isa);

/// The active kernel table. Chosen once at first use: the widest available ISA,
/// unless the COMMLAB_SIMD environment variable names another ("scalar",
/// "avx2").
const KernelTable& kernels();

/// Override the active kernel table (tests and the CLI --simd flag).
void set_active_isa(Isa isa);

} // namespace commlab::simd
