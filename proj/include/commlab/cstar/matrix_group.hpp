#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "commlab/linalg/complex_matrix.hpp"

namespace commlab::cstar {

/// ||I - U||_op. Throws std::domain_error when U is not unitary (defect > 1e-9).
double ell_op(const ComplexMatrix& u);

struct CommutatorBound {
    double lhs;    // ell_op(U V U* V*)
    double rhs;    // 2 ell_op(U) ell_op(V)
    double margin; // rhs - lhs
};

/// Throws std::invalid_argument on a dimension mismatch.
CommutatorBound commutator_ineq_check(const ComplexMatrix& u, const ComplexMatrix& v);

/// Finite group of unitary matrices with its Cayley table. Element 0 is the
/// identity.
class MatrixGroup {
public:
    MatrixGroup(std::vector<ComplexMatrix> elements, std::vector<std::size_t> generators,
                std::vector<std::size_t> table);

    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t dim() const noexcept { return elements_.front().dim(); }
    const ComplexMatrix& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }
    std::size_t product(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
    const std::vector<std::size_t>& table() const noexcept { return table_; }

private:
    std::vector<ComplexMatrix> elements_;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
};

/// Evidence that a generated group is not a finite (discrete) group at the
/// configured tolerances.
struct NonClosure {
    enum class Reason { NearIdentity, CapExceeded, TableMismatch };
    Reason reason;
    ComplexMatrix element;
    double ell;
    std::size_t elements_found;
};

std::string reason_name(NonClosure::Reason r);

struct ClosureOptions {
    std::size_t cap = 10000;
    double merge_eps = 1e-8;
    double near_identity = 0.01;
};

using ClosureResult = std::variant<MatrixGroup, NonClosure>;

/// Breadth-first closure under right multiplication by the generators.
/// Elements within merge_eps (operator norm) are identified; a new element
/// within near_identity of I is reported as NonClosure, as is exceeding cap.
/// Throws std::invalid_argument for an empty or mixed-dimension generator
/// list, non-unitary generators, or cap < number of generators.
ClosureResult group_closure(const std::vector<ComplexMatrix>& generators,
                            const ClosureOptions& opts = {});

struct FilterReport {
    double threshold;
    std::vector<std::size_t> generating_set;
    std::vector<std::size_t> subgroup;
    bool abelian;
    bool normal;
    std::vector<double> ell; // per element of the ambient group
};

/// Subgroup generated by {g : ell_op(g) < t}, computed in the Cayley table.
/// Throws std::invalid_argument for negative or NaN t.
FilterReport gamma_filter(const MatrixGroup& g, double t);

struct HeisenbergPair {
    std::size_t n;
    ComplexMatrix clock;
    ComplexMatrix shift;
    cplx commutator_scalar;    // [clock, shift] = scalar * I
    double scalar_residual;    // ||[clock, shift] - scalar I||_op
    bool nontrivial;           // scalar differs from 1
    double ell_clock;
    double ell_shift;
    double min_ell;
};

/// Clock diag(1, w, ..., w^{n-1}) with w = exp(2 pi i / n) and the cyclic
/// shift e_j -> e_{j+1}. Throws std::invalid_argument for n < 2.
HeisenbergPair heisenberg_irrep(std::size_t n);

struct CatalogEntry {
    std::string name;
    std::vector<ComplexMatrix> generators;
};

/// {"groups": [{"name": ..., "generators": [[[re, im], ...], ...]}]}; each
/// generator is a list of rows. Throws std::invalid_argument on malformed
/// input and std::runtime_error when the file cannot be read.
std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

/// Quaternion group, Pauli group {X, Z}, binary tetrahedral group and the
/// cyclic group of order 13 in U(1).
std::vector<CatalogEntry> builtin_catalog();

} // namespace commlab::cstar
