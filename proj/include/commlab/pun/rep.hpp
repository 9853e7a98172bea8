#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commlab/linalg/complex_matrix.hpp"
#include "commlab/words/finite_group.hpp"

namespace commlab::pun {

using words::FiniteGroup;
using words::FiniteGroupPtr;

/// Unitary representation of a finite group, one image per element.
class FiniteRep {
public:
    static constexpr double kTolerance = 1e-10;

    /// Validates unitarity and pi(g) pi(h) = pi(gh) for all pairs, both within
    /// kTolerance. Throws std::invalid_argument otherwise.
    FiniteRep(FiniteGroupPtr group, std::vector<ComplexMatrix> images, std::string name = {});

    /// Extends generator images breadth-first over the Cayley graph, then
    /// validates as above. Throws when the generators do not generate.
    static FiniteRep from_generators(FiniteGroupPtr group,
                                     const std::vector<std::pair<FiniteGroup::Element, ComplexMatrix>>& gens,
                                     std::string name = {});

    const FiniteGroup& group() const noexcept { return *group_; }
    const FiniteGroupPtr& group_ptr() const noexcept { return group_; }
    std::size_t dim() const noexcept { return images_.front().dim(); }
    const ComplexMatrix& image(FiniteGroup::Element g) const { return images_.at(g); }
    const std::vector<ComplexMatrix>& images() const noexcept { return images_; }
    const std::string& name() const noexcept { return name_; }
    bool unit_determinant() const noexcept { return unit_det_; }
    /// Some element acts by a non-identity matrix.
    bool nontrivial() const noexcept { return nontrivial_; }

private:
    FiniteGroupPtr group_;
    std::vector<ComplexMatrix> images_;
    std::string name_;
    bool unit_det_ = false;
    bool nontrivial_ = false;
};

/// Singular values at or below this count as zero in every rank decision.
inline constexpr double kRankThreshold = 1e-8;

/// Complex dimension of {X : pi(g) X = X pi(g) for all g}.
std::size_t commutant_dimension(const FiniteRep& rep);

/// Real basis of {X in su(n) : pi(g) X pi(g)* = X for all g}.
std::vector<ComplexMatrix> adjoint_fixed_space(const FiniteRep& rep);

/// The traceless skew-Hermitian basis used to parametrize su(n): off-diagonal
/// E_jk - E_kj and i(E_jk + E_kj) for j < k, then i(E_jj - E_{j+1,j+1}).
std::vector<ComplexMatrix> su_basis(std::size_t n);

struct CriterionVerdict {
    bool irreducible;
    std::size_t commutant_dim;
    std::size_t fixed_space_dim;
    bool nontrivial;
    std::size_t min_nontrivial_dim;
    bool least_dimension; // nontrivial and dim <= min of the supplied dimensions
    bool guarantee;       // irreducible and least_dimension
    std::string conclusion; // "uniformly_discrete" or "inconclusive"
};

/// `nontrivial_irrep_dims` are the dimensions of the group's nontrivial
/// irreducible representations, supplied by the caller. Throws
/// std::invalid_argument when the list is empty or contains 0.
CriterionVerdict least_dimension_criterion(const FiniteRep& rep,
                                           std::span<const std::size_t> nontrivial_irrep_dims);

struct DihedralStep {
    std::size_t axis_order;    // m in D_m
    std::size_t group_order;   // 2m
    double min_nonzero_ell;    // measured over the constructed matrices
    bool closed;               // closure oracle reproduces exactly this set
    bool contains_previous;    // previous step's elements all present (1e-10)
};

inline constexpr std::size_t kDihedralMaxAxisOrder = 256;

/// D_{n0 2^j} in SO(3), j = 0..k: rotations about the z axis and the flips
/// about axes in the xy plane. Throws std::invalid_argument for n0 < 3 or
/// k < 1, std::length_error when n0 2^k exceeds kDihedralMaxAxisOrder.
std::vector<DihedralStep> dihedral_chain_demo(std::size_t n0, int k);

/// Elements of D_m in SO(3): rotations R^j first, then R^j F.
std::vector<ComplexMatrix> dihedral_so3(std::size_t m);

/// 3-dimensional rotation representation of Alt(5) (icosahedral group),
/// over groups::alternating5().
FiniteRep alt5_icosahedral();
/// 2-dimensional representation of Q8 in SU(2): i -> diag(i, -i), j -> [[0,1],[-1,0]].
FiniteRep quaternion_su2();
/// Z/n in SU(2): r1 -> diag(w, conj(w)), w = exp(2 pi i / n).
FiniteRep cyclic_su2(std::size_t n);
FiniteRep trivial_rep(FiniteGroupPtr group, std::size_t n);
FiniteRep direct_sum(const FiniteRep& a, const FiniteRep& b);

struct RepEntry {
    FiniteRep rep;
    std::vector<std::size_t> dims; // empty when not supplied
};

/// Group names understood by the rep catalog: "alt4", "alt5", "klein4",
/// "quaternion", "sym3", "cyclicN", "dihedralN". Throws std::invalid_argument
/// for anything else.
FiniteGroupPtr group_by_name(const std::string& name);

/// {"reps": [{"name", "group", "generators": [{"element", "matrix"}], "dims"}]}
/// with matrices as rows of [re, im] pairs.
std::vector<RepEntry> parse_rep_catalog(const std::string& json_text);
std::vector<RepEntry> load_rep_catalog(const std::string& path);

} // namespace commlab::pun
