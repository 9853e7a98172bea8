#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstring>

#include "commlab/linalg/complex_matrix.hpp"
#include "commlab/simd/kernels.hpp"
#include "commlab/util/parallel.hpp"
#include "support/generators.hpp"

using commlab::ComplexMatrix;
namespace simd = commlab::simd;

namespace {

bool bit_equal(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return a.dim() == b.dim() &&
           std::memcmp(a.re().data(), b.re().data(), a.size() * sizeof(double)) == 0 &&
           std::memcmp(a.im().data(), b.im().data(), a.size() * sizeof(double)) == 0;
}

ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b)
{
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += a(i, k) * b(k, j);
            }
            c.set(i, j, acc);
        }
    }
    return c;
}

} // namespace

TEST_CASE("scalar kernel is always available and listed first")
{
    const auto isas = simd::available_isas();
    REQUIRE(!isas.empty());
    CHECK(isas.front() == simd::Isa::Scalar);
    CHECK(simd::kernels_for(simd::Isa::Scalar).isa == simd::Isa::Scalar);
    CHECK(simd::isa_name(simd::Isa::Avx2) == "avx2");
}

TEST_CASE("scalar gemm agrees with a naive triple loop")
{
    testgen::Lcg rng(11);
    for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 65u}) {
        const auto a = testgen::random_matrix(rng, n);
        const auto b = testgen::random_matrix(rng, n);
        const auto c = commlab::multiply_with(simd::scalar_kernels(), a, b);
        const auto ref = naive_product(a, b);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                err = std::max(err, std::abs(c(i, j) - ref(i, j)));
            }
        }
        CHECK(err < 1e-12 * static_cast<double>(n));
    }
}

TEST_CASE("every available kernel is bit-identical to the scalar reference")
{
    testgen::Lcg rng(2024);
    const auto& ref = simd::scalar_kernels();
    for (auto isa : simd::available_isas()) {
        const auto& k = simd::kernels_for(isa);
        CAPTURE(simd::isa_name(isa));
        // Sizes straddle the vector width and the k-block of 64.
        for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 63u, 64u, 65u, 130u}) {
            CAPTURE(n);
            const auto a = testgen::random_matrix(rng, n);
            const auto b = testgen::random_matrix(rng, n);
            CHECK(bit_equal(commlab::multiply_with(k, a, b), commlab::multiply_with(ref, a, b)));

            const auto dk = k.dot_conj(a.planar(), b.planar(), a.size());
            const auto dr = ref.dot_conj(a.planar(), b.planar(), a.size());
            CHECK(std::bit_cast<std::uint64_t>(dk.real()) == std::bit_cast<std::uint64_t>(dr.real()));
            CHECK(std::bit_cast<std::uint64_t>(dk.imag()) == std::bit_cast<std::uint64_t>(dr.imag()));

            const double nk = k.diff_norm2(a.planar(), b.planar(), a.size());
            const double nr = ref.diff_norm2(a.planar(), b.planar(), a.size());
            CHECK(std::bit_cast<std::uint64_t>(nk) == std::bit_cast<std::uint64_t>(nr));
        }
    }
}

TEST_CASE("products do not depend on the thread count")
{
    testgen::Lcg rng(5);
    const auto a = testgen::random_matrix(rng, 200);
    const auto b = testgen::random_matrix(rng, 200);
    commlab::set_thread_count(1);
    const auto one = a * b;
    commlab::set_thread_count(3);
    const auto three = a * b;
    commlab::set_thread_count(1);
    CHECK(bit_equal(one, three));
}

TEST_CASE("set_active_isa switches the dispatched table")
{
    const auto before = simd::kernels().isa;
    for (auto isa : simd::available_isas()) {
        simd::set_active_isa(isa);
        CHECK(simd::kernels().isa == isa);
    }
    simd::set_active_isa(before);
}

TEST_CASE("dot_conj and diff_norm2 match their definitions")
{
    testgen::Lcg rng(77);
    const auto a = testgen::random_matrix(rng, 9);
    const auto b = testgen::random_matrix(rng, 9);
    std::complex<double> dot = 0.0;
    double diff = 0.0;
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            dot += a(i, j) * std::conj(b(i, j));
            diff += std::norm(a(i, j) - b(i, j));
        }
    }
    const auto& k = simd::kernels();
    CHECK(std::abs(k.dot_conj(a.planar(), b.planar(), 81) - dot) < 1e-12);
    CHECK(k.diff_norm2(a.planar(), b.planar(), 81) == doctest::Approx(diff).epsilon(1e-13));
}
