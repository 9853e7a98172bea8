#include "commlab/cstar/matrix_group.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace commlab::cstar {

namespace {

constexpr double kUnitaryCheck = 1e-9;

void require_unitary(const ComplexMatrix& u, const char* what)
{
    if (u.dim() == 0 || unitarity_defect(u) > kUnitaryCheck) {
        throw std::domain_error(std::string(what) + ": matrix is not unitary");
    }
}

// Operator-norm closeness with a cheap Frobenius prefilter:
// ||X||_F / sqrt(n) <= ||X||_op <= ||X||_F.
bool within(const ComplexMatrix& a, const ComplexMatrix& b, double eps)
{
    const double fro = std::sqrt(simd::kernels().diff_norm2(a.planar(), b.planar(), a.size()));
    if (fro <= eps) {
        return true;
    }
    if (fro > eps * std::sqrt(static_cast<double>(a.dim()))) {
        return false;
    }
    return op_dist(a, b) <= eps;
}

std::size_t find_element(const std::vector<ComplexMatrix>& elems, const ComplexMatrix& m,
                         double eps)
{
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (within(elems[i], m, eps)) {
            return i;
        }
    }
    return elems.size();
}

ComplexMatrix su2(cplx a, cplx b)
{
    // [[a, b], [-conj(b), conj(a)]]
    return ComplexMatrix::from_rows({{a, b}, {-std::conj(b), std::conj(a)}});
}

} // namespace

double ell_op(const ComplexMatrix& u)
{
    require_unitary(u, "ell_op");
    return op_dist(ComplexMatrix::identity(u.dim()), u);
}

CommutatorBound commutator_ineq_check(const ComplexMatrix& u, const ComplexMatrix& v)
{
    require_same_dim(u, v, "commutator_ineq_check");
    const double lu = ell_op(u);
    const double lv = ell_op(v);
    const double lhs = ell_op(group_commutator(u, v));
    const double rhs = 2.0 * lu * lv;
    return {lhs, rhs, rhs - lhs};
}

MatrixGroup::MatrixGroup(std::vector<ComplexMatrix> elements, std::vector<std::size_t> generators,
                         std::vector<std::size_t> table)
    : elements_(std::move(elements)), generators_(std::move(generators)), table_(std::move(table))
{
    const std::size_t n = elements_.size();
    if (n == 0 || table_.size() != n * n) {
        throw std::invalid_argument("MatrixGroup: table size does not match element count");
    }
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a * n + b] >= n) {
                throw std::invalid_argument("MatrixGroup: table entry out of range");
            }
            if (table_[a * n + b] == 0) {
                inverse_[a] = b;
            }
        }
        if (inverse_[a] == n) {
            throw std::invalid_argument("MatrixGroup: element without inverse");
        }
    }
}

std::string reason_name(NonClosure::Reason r)
{
    switch (r) {
    case NonClosure::Reason::NearIdentity:
        return "near_identity";
    case NonClosure::Reason::CapExceeded:
        return "cap_exceeded";
    case NonClosure::Reason::TableMismatch:
        return "table_mismatch";
    }
    return "unknown";
}

ClosureResult group_closure(const std::vector<ComplexMatrix>& generators,
                            const ClosureOptions& opts)
{
    if (generators.empty()) {
        throw std::invalid_argument("group_closure: no generators");
    }
    if (opts.cap < generators.size()) {
        throw std::invalid_argument("group_closure: cap is smaller than the generator count");
    }
    if (!(opts.merge_eps > 0.0) || !(opts.near_identity >= opts.merge_eps)) {
        throw std::invalid_argument("group_closure: need 0 < merge_eps <= near_identity");
    }
    const std::size_t d = generators.front().dim();
    for (const auto& g : generators) {
        require_same_dim(generators.front(), g, "group_closure");
        if (unitarity_defect(g) > kUnitaryCheck) {
            throw std::invalid_argument("group_closure: generator is not unitary");
        }
    }

    const ComplexMatrix id = ComplexMatrix::identity(d);
    std::vector<ComplexMatrix> elems{id};

    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : generators) {
            ComplexMatrix p = elems[head] * g;
            if (find_element(elems, p, opts.merge_eps) < elems.size()) {
                continue;
            }
            const double dist = op_dist(id, p);
            if (dist <= opts.near_identity) {
                return NonClosure{NonClosure::Reason::NearIdentity, p, dist, elems.size()};
            }
            elems.push_back(std::move(p));
            if (elems.size() > opts.cap) {
                const double l = op_dist(id, elems.back());
                return NonClosure{NonClosure::Reason::CapExceeded, elems.back(), l, elems.size()};
            }
        }
    }

    const std::size_t n = elems.size();
    std::vector<std::size_t> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) {
        gens.push_back(find_element(elems, g, opts.merge_eps));
    }
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            ComplexMatrix p = elems[a] * elems[b];
            const std::size_t idx = find_element(elems, p, opts.merge_eps);
            if (idx == n) {
                const double l = op_dist(id, p);
                return NonClosure{NonClosure::Reason::TableMismatch, std::move(p), l, n};
            }
            table[a * n + b] = idx;
        }
    }
    return MatrixGroup(std::move(elems), std::move(gens), std::move(table));
}

FilterReport gamma_filter(const MatrixGroup& g, double t)
{
    if (!(t >= 0.0)) {
        throw std::invalid_argument("gamma_filter: threshold must be non-negative");
    }
    const std::size_t n = g.order();
    FilterReport rep{t, {}, {}, true, true, {}};
    rep.ell.reserve(n);
    for (const auto& e : g.elements()) {
        rep.ell.push_back(ell_op(e));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rep.ell[i] < t) {
            rep.generating_set.push_back(i);
        }
    }

    std::vector<char> in(n, 0);
    in[0] = 1;
    rep.subgroup.push_back(0);
    for (std::size_t head = 0; head < rep.subgroup.size(); ++head) {
        for (std::size_t s : rep.generating_set) {
            const std::size_t p = g.product(rep.subgroup[head], s);
            if (!in[p]) {
                in[p] = 1;
                rep.subgroup.push_back(p);
            }
        }
    }
    std::sort(rep.subgroup.begin(), rep.subgroup.end());

    for (std::size_t a : rep.subgroup) {
        for (std::size_t b : rep.subgroup) {
            if (g.product(a, b) != g.product(b, a)) {
                rep.abelian = false;
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t h : rep.subgroup) {
            if (!in[g.product(g.product(x, h), g.inverse(x))]) {
                rep.normal = false;
            }
        }
    }
    return rep;
}

HeisenbergPair heisenberg_irrep(std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("heisenberg_irrep: n must be at least 2");
    }
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<cplx> diag(n);
    for (std::size_t j = 0; j < n; ++j) {
        diag[j] = std::polar(1.0, step * static_cast<double>(j));
    }
    ComplexMatrix clock = ComplexMatrix::diagonal(diag);
    ComplexMatrix shift(n);
    for (std::size_t j = 0; j < n; ++j) {
        shift.set((j + 1) % n, j, 1.0);
    }
    const ComplexMatrix comm = group_commutator(clock, shift);
    const cplx scalar = normalized_trace(comm);
    ComplexMatrix scaled = ComplexMatrix::identity(n);
    scaled *= scalar;

    HeisenbergPair out{n, clock, shift, scalar, op_dist(comm, scaled), std::abs(scalar - 1.0) > 1e-9,
                       ell_op(clock), ell_op(shift), 0.0};
    out.min_ell = std::min(out.ell_clock, out.ell_shift);
    return out;
}

std::vector<CatalogEntry> parse_catalog(const std::string& json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("catalog: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array()) {
        throw std::invalid_argument("catalog: expected an object with a \"groups\" array");
    }
    std::vector<CatalogEntry> out;
    for (const auto& g : doc["groups"]) {
        if (!g.is_object() || !g.contains("name") || !g.contains("generators")) {
            throw std::invalid_argument("catalog: entry needs \"name\" and \"generators\"");
        }
        CatalogEntry entry{g["name"].get<std::string>(), {}};
        for (const auto& m : g["generators"]) {
            std::vector<std::vector<cplx>> rows;
            for (const auto& r : m) {
                std::vector<cplx> row;
                for (const auto& z : r) {
                    if (!z.is_array() || z.size() != 2) {
                        throw std::invalid_argument("catalog: entries are [re, im] pairs");
                    }
                    row.emplace_back(z[0].get<double>(), z[1].get<double>());
                }
                rows.push_back(std::move(row));
            }
            entry.generators.push_back(ComplexMatrix::from_rows(rows));
        }
        if (entry.generators.empty()) {
            throw std::invalid_argument("catalog: group \"" + entry.name + "\" has no generators");
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read catalog: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries)
{
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& m : e.generators) {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < m.dim(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t j = 0; j < m.dim(); ++j) {
                    row.push_back({m(i, j).real(), m(i, j).imag()});
                }
                rows.push_back(std::move(row));
            }
            gens.push_back(std::move(rows));
        }
        groups.push_back({{"name", e.name}, {"generators", std::move(gens)}});
    }
    return nlohmann::json{{"groups", std::move(groups)}}.dump(2) + "\n";
}

std::vector<CatalogEntry> builtin_catalog()
{
    const cplx i{0.0, 1.0};
    std::vector<CatalogEntry> out;
    out.push_back({"quaternion", {su2(i, 0.0), su2(0.0, 1.0)}});
    out.push_back({"pauli",
                   {ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
                    ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})}});
    // (1 + i + j + k) / 2 and i as unit quaternions.
    out.push_back({"binary_tetrahedral", {su2(i, 0.0), su2(cplx{0.5, 0.5}, cplx{0.5, 0.5})}});
    const std::vector<cplx> z13{std::polar(1.0, 2.0 * std::numbers::pi / 13.0)};
    out.push_back({"cyclic13", {ComplexMatrix::diagonal(z13)}});
    return out;
}

} // namespace commlab::cstar
