#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "commlab/cli/commands.hpp"
#include "commlab/pun/rep.hpp"

using namespace commlab;
using namespace commlab::pun;

namespace {

double fixed_residual(const FiniteRep& rep, const ComplexMatrix& x)
{
    double worst = 0.0;
    for (const auto& p : rep.images()) {
        worst = std::max(worst, op_dist(p * x * p.adjoint(), x));
    }
    return worst;
}

} // namespace

TEST_CASE("catalog representations are unitary homomorphisms")
{
    const auto ico = alt5_icosahedral();
    CHECK(ico.dim() == 3);
    CHECK(ico.group().order() == 60);
    CHECK(ico.unit_determinant());
    const auto q = quaternion_su2();
    CHECK(q.unit_determinant());
    CHECK(cyclic_su2(8).unit_determinant());
    CHECK(q.nontrivial());
    CHECK_FALSE(trivial_rep(words::groups::symmetric3(), 2).nontrivial());

    // A map that is not a homomorphism.
    auto g = words::groups::cyclic(3);
    const std::vector<cplx> d{cplx(0.0, 1.0)};
    CHECK_THROWS_AS(FiniteRep::from_generators(g, {{1, ComplexMatrix::diagonal(d)}}), std::invalid_argument);
    // Generators that do not generate.
    auto s3 = words::groups::symmetric3();
    CHECK_THROWS_AS(FiniteRep::from_generators(s3, {{1, ComplexMatrix::identity(1)}}), std::invalid_argument);
}

TEST_CASE("commutant dimensions")
{
    // Frozen from tests/oracles/matrix_oracle.py.
    CHECK(commutant_dimension(trivial_rep(words::groups::symmetric3(), 2)) == 4);
    CHECK(commutant_dimension(trivial_rep(words::groups::symmetric3(), 3)) == 9);
    CHECK(commutant_dimension(quaternion_su2()) == 1);
    CHECK(commutant_dimension(alt5_icosahedral()) == 1);
    CHECK(commutant_dimension(cyclic_su2(8)) == 2);
    const auto q = quaternion_su2();
    CHECK(commutant_dimension(direct_sum(trivial_rep(q.group_ptr(), 1), q)) == 2);
}

TEST_CASE("adjoint fixed spaces")
{
    CHECK(su_basis(3).size() == 8);
    CHECK(adjoint_fixed_space(quaternion_su2()).empty());
    CHECK(adjoint_fixed_space(alt5_icosahedral()).empty());
    const auto triv = trivial_rep(words::groups::cyclic(3), 2);
    CHECK(adjoint_fixed_space(triv).size() == 3);

    const auto z8 = cyclic_su2(8);
    const auto fixed = adjoint_fixed_space(z8);
    REQUIRE(fixed.size() == 1);
    const auto& x = fixed.front();
    CHECK(fixed_residual(z8, x) <= 1e-12);
    // The diagonal traceless direction.
    CHECK(std::abs(x(0, 1)) <= 1e-12);
    CHECK(std::abs(x(0, 0) + x(1, 1)) <= 1e-12);
    CHECK(std::abs(x(0, 0).real()) <= 1e-12);
    CHECK(op_dist(x.adjoint(), cplx(-1.0) * x) <= 1e-12);
}

TEST_CASE("fixed space is zero exactly when the commutant is scalar")
{
    const auto q = quaternion_su2();
    const std::vector<FiniteRep> reps{alt5_icosahedral(), q, cyclic_su2(8), cyclic_su2(5),
                                      trivial_rep(q.group_ptr(), 2), direct_sum(trivial_rep(q.group_ptr(), 1), q)};
    for (const auto& r : reps) {
        CAPTURE(r.name());
        CHECK(adjoint_fixed_space(r).empty() == (commutant_dimension(r) == 1));
    }
}

TEST_CASE("least-dimension criterion")
{
    const std::vector<std::size_t> a5{3, 3, 4, 5};
    const auto v = least_dimension_criterion(alt5_icosahedral(), a5);
    CHECK(v.irreducible);
    CHECK(v.commutant_dim == 1);
    CHECK(v.fixed_space_dim == 0);
    CHECK(v.least_dimension);
    CHECK(v.guarantee);
    CHECK(v.conclusion == "uniformly_discrete");

    const std::vector<std::size_t> q8{1, 1, 1, 2};
    const auto vq = least_dimension_criterion(quaternion_su2(), q8);
    CHECK(vq.irreducible);
    CHECK_FALSE(vq.least_dimension);
    CHECK_FALSE(vq.guarantee);
    CHECK(vq.conclusion == "inconclusive");

    const std::vector<std::size_t> z8{1, 1, 1, 1, 1, 1, 1};
    const auto vz = least_dimension_criterion(cyclic_su2(8), z8);
    CHECK(vz.fixed_space_dim == 1);
    CHECK_FALSE(vz.guarantee);

    CHECK_THROWS_AS(least_dimension_criterion(quaternion_su2(), std::span<const std::size_t>()), std::invalid_argument);
    const std::vector<std::size_t> zero{0, 2};
    CHECK_THROWS_AS(least_dimension_criterion(quaternion_su2(), zero), std::invalid_argument);
}

TEST_CASE("property: enlarging the dimension list never breaks a guarantee")
{
    const auto rep = alt5_icosahedral();
    std::vector<std::size_t> dims{3, 3, 4, 5};
    REQUIRE(least_dimension_criterion(rep, dims).guarantee);
    for (std::size_t extra = 3; extra < 12; ++extra) {
        dims.push_back(extra);
        CHECK(least_dimension_criterion(rep, dims).guarantee);
    }
}

TEST_CASE("dihedral chain in SO(3)")
{
    const auto steps = dihedral_chain_demo(6, 4);
    REQUIRE(steps.size() == 5);
    // Frozen from tests/oracles/matrix_oracle.py.
    const double frozen[] = {1.0, 0.5176380902050415, 0.2610523844401032, 0.13080625846028612,
                             0.06543816564355202};
    for (std::size_t j = 0; j < steps.size(); ++j) {
        CAPTURE(j);
        CHECK(steps[j].axis_order == (std::size_t{6} << j));
        CHECK(steps[j].group_order == (std::size_t{12} << j));
        CHECK(steps[j].min_nonzero_ell == doctest::Approx(frozen[j]).epsilon(1e-12));
        CHECK(steps[j].closed);
        CHECK(steps[j].contains_previous);
        if (j > 0) {
            CHECK(steps[j].min_nonzero_ell < steps[j - 1].min_nonzero_ell);
        }
    }
    CHECK_THROWS_AS(dihedral_chain_demo(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_chain_demo(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_chain_demo(6, 10), std::length_error);
}

TEST_CASE("bundled rep catalog")
{
    const auto entries = load_rep_catalog(cli::data_dir() + "/reps.json");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].rep.name() == "alt5_icosahedral");
    CHECK(least_dimension_criterion(entries[0].rep, entries[0].dims).guarantee);
    CHECK_FALSE(least_dimension_criterion(entries[1].rep, entries[1].dims).guarantee);
    CHECK(adjoint_fixed_space(entries[2].rep).size() == 1);
    CHECK_THROWS_AS(group_by_name("cyclicX"), std::invalid_argument);
    CHECK(group_by_name("dihedral5")->order() == 10);
}
