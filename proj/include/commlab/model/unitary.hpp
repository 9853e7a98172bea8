#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "commlab/linalg/complex_matrix.hpp"

namespace commlab::model {

/// How a UnitaryMatrix was produced.
struct Provenance {
    std::string kind; // "haar", "prescribed_trace", "corner_haar", "explicit"
    std::uint64_t seed = 0;
    double parameter = 0.0; // alpha or t, when relevant
};

/// Maximum ||U* U - I||_op accepted at construction.
inline constexpr double kUnitarityTolerance = 1e-10;

/// Square unitary matrix with its construction record.
class UnitaryMatrix {
public:
    /// Throws std::invalid_argument when m fails the unitarity tolerance.
    UnitaryMatrix(ComplexMatrix m, Provenance p);

    std::size_t dim() const noexcept { return m_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    const Provenance& provenance() const noexcept { return prov_; }

private:
    ComplexMatrix m_;
    Provenance prov_;
};

/// Haar-distributed unitary: complex Gaussian matrix, QR, and the phases of
/// R's diagonal divided out of Q. Deterministic in (n, seed).
/// Throws std::invalid_argument for n = 0.
UnitaryMatrix sample_haar(std::size_t n, std::uint64_t seed);

struct PrescribedTrace {
    UnitaryMatrix unitary;
    double realized_trace; // (#(+1) - #(-1)) / n
    std::size_t plus_count;
};

/// Q D Q* with D holding round(n(1+alpha)/2) eigenvalues +1 and -1 otherwise,
/// Q = sample_haar(n, seed). alpha = +-1 gives exactly +-I.
/// Throws std::invalid_argument for n < 2 or |alpha| > 1.
PrescribedTrace unitary_with_trace(double alpha, std::size_t n, std::uint64_t seed);

/// Haar unitary on a corner of size k = round(t n) plus the identity on the
/// complement, conjugated by an independent Haar unitary. Requires 1 <= k < n.
UnitaryMatrix corner_haar(double t, std::size_t n, std::uint64_t seed);

struct FreenessReport {
    std::complex<double> trace_u;
    std::complex<double> trace_v;
    std::complex<double> trace_uv;
    std::complex<double> trace_commutator;
    double product_deviation;    // |tau(UV) - tau(U) tau(V)|
    double commutator_deviation; // |tau(UVU*V*) - (1 - (1-|tau U|^2)(1-|tau V|^2))|
};

/// Deviations of (U, V) from the two free-pair trace identities.
FreenessReport freeness_report(const ComplexMatrix& u, const ComplexMatrix& v);

/// Row-major (re, im) pairs.
std::vector<std::pair<double, double>> to_pairs(const ComplexMatrix& m);

} // namespace commlab::model
