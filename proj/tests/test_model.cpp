#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "commlab/linalg/complex_matrix.hpp"
#include "commlab/model/unitary.hpp"
#include "commlab/util/rng.hpp"
#include "support/generators.hpp"

using namespace commlab;
using namespace commlab::model;

namespace {

// Kolmogorov-Smirnov distance of a sample against Uniform[0, 1].
double ks_uniform(std::vector<double> xs)
{
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        d = std::max({d, static_cast<double>(i + 1) / n - xs[i], xs[i] - static_cast<double>(i) / n});
    }
    return d;
}

} // namespace

TEST_CASE("SplitMix64 reference outputs and seed derivation")
{
    // Published SplitMix64 sequence for seed 1234567.
    SplitMix64 r(1234567);
    CHECK(r.next() == 6457827717110365317ULL);
    CHECK(r.next() == 3203168211198807973ULL);
    CHECK(r.next() == 9817491932198370423ULL);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
}

TEST_CASE("op_norm agrees with a full SVD above the power-iteration cutoff")
{
    testgen::Lcg rng(8);
    for (std::size_t n : {3u, 64u, 80u, 150u}) {
        const auto m = testgen::random_matrix(rng, n);
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.to_eigen());
        CHECK(op_norm(m) == doctest::Approx(svd.singularValues()[0]).epsilon(1e-10));
    }
    const auto u = testgen::random_unitary(rng, 100);
    CHECK(unitarity_defect(u) < 1e-12);
    CHECK(op_norm(u) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Haar samples are unitary and reproducible")
{
    for (std::size_t n : {1u, 2u, 17u, 128u}) {
        const auto a = sample_haar(n, 99);
        const auto b = sample_haar(n, 99);
        CHECK(a.matrix() == b.matrix());
        CHECK(unitarity_defect(a.matrix()) <= 1e-10);
        CHECK(a.provenance().kind == "haar");
    }
    CHECK_FALSE(sample_haar(4, 1).matrix() == sample_haar(4, 2).matrix());
    CHECK_THROWS_AS(sample_haar(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(UnitaryMatrix(ComplexMatrix::identity(3) + ComplexMatrix::identity(3), {"explicit", 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("Haar traces are O(1/N)")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto u = sample_haar(256, seed);
        CHECK(std::abs(normalized_trace(u.matrix())) <= 10.0 / 256.0);
    }
}

TEST_CASE("Haar measure on U(2): |U_11|^2 and arg U_11 are uniform (KS)")
{
    std::vector<double> mod;
    std::vector<double> arg;
    for (std::uint64_t s = 0; s < 10000; ++s) {
        const auto u = sample_haar(2, derive_seed(777, s)).matrix();
        mod.push_back(std::norm(u(0, 0)));
        arg.push_back((std::arg(u(0, 0)) + std::numbers::pi) / (2.0 * std::numbers::pi));
    }
    CHECK(ks_uniform(mod) <= 0.05);
    CHECK(ks_uniform(arg) <= 0.05);
}

TEST_CASE("prescribed trace unitaries")
{
    const auto p = unitary_with_trace(0.9, 1000, 5);
    CHECK(p.realized_trace == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(p.plus_count == 950);
    const cplx tau = normalized_trace(p.unitary.matrix());
    CHECK(std::abs(tau - 0.9) <= 1e-12);
    CHECK(std::sqrt(2.0 - 2.0 * tau.real()) == doctest::Approx(std::sqrt(0.2)).epsilon(1e-12));
    // Involution: U^2 = I.
    CHECK(op_dist(p.unitary.matrix() * p.unitary.matrix(), ComplexMatrix::identity(1000)) <= 1e-10);

    CHECK(unitary_with_trace(1.0, 8, 1).unitary.matrix() == ComplexMatrix::identity(8));
    CHECK(unitary_with_trace(-1.0, 8, 1).unitary.matrix() == cplx(-1.0) * ComplexMatrix::identity(8));
    CHECK_THROWS_AS(unitary_with_trace(1.5, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(unitary_with_trace(0.5, 1, 1), std::invalid_argument);
}

TEST_CASE("corner Haar unitaries are close to the identity")
{
    const auto u = corner_haar(0.2, 500, 3);
    const cplx tau = normalized_trace(u.matrix());
    CHECK(tau.real() >= 0.75);
    CHECK(std::sqrt(2.0 - 2.0 * tau.real()) == doctest::Approx(std::sqrt(0.4)).epsilon(0.05 / std::sqrt(0.4)));
    CHECK_THROWS_AS(corner_haar(0.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(corner_haar(1.0, 10, 1), std::invalid_argument);
}

TEST_CASE("freeness report")
{
    const auto u = sample_haar(64, 12).matrix();
    const auto r = freeness_report(u, ComplexMatrix::identity(64));
    CHECK(r.product_deviation == 0.0);
    CHECK(r.commutator_deviation <= 1e-13);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto f = freeness_report(sample_haar(256, derive_seed(s, 0)).matrix(),
                                       sample_haar(256, derive_seed(s, 1)).matrix());
        CHECK(f.product_deviation <= 0.05);
        CHECK(f.commutator_deviation <= 0.05);
    }
    CHECK_THROWS_AS(freeness_report(u, ComplexMatrix::identity(3)), std::invalid_argument);
}
