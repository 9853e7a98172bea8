#include "commlab/pun/rep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>
#include <json.hpp>

#include "commlab/cstar/matrix_group.hpp"

namespace commlab::pun {

namespace {

std::size_t null_dimension(const Eigen::VectorXd& singular, std::size_t cols)
{
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < singular.size(); ++i) {
        if (singular[i] > kRankThreshold) {
            ++rank;
        }
    }
    return cols - rank;
}

ComplexMatrix rotation_z(double theta)
{
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return ComplexMatrix::from_rows({{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}});
}

FiniteGroup::Element require_label(const FiniteGroup& g, std::string_view label)
{
    auto e = g.find(label);
    if (!e) {
        throw std::invalid_argument("no element labelled '" + std::string(label) + "' in " + g.name());
    }
    return *e;
}

std::size_t parse_suffix(const std::string& name, std::string_view prefix)
{
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("unknown group name: " + name);
    }
    return static_cast<std::size_t>(std::stoul(digits));
}

} // namespace

FiniteRep::FiniteRep(FiniteGroupPtr group, std::vector<ComplexMatrix> images, std::string name)
    : group_(std::move(group)), images_(std::move(images)), name_(std::move(name))
{
    if (!group_) {
        throw std::invalid_argument("FiniteRep: null group");
    }
    const std::size_t order = group_->order();
    if (images_.size() != order || images_.front().dim() == 0) {
        throw std::invalid_argument("FiniteRep: need one non-empty image per group element");
    }
    const std::size_t n = images_.front().dim();
    const ComplexMatrix id = ComplexMatrix::identity(n);
    unit_det_ = true;
    for (const auto& m : images_) {
        require_same_dim(images_.front(), m, "FiniteRep");
        if (unitarity_defect(m) > kTolerance) {
            throw std::invalid_argument("FiniteRep: image is not unitary");
        }
        if (std::abs(m.to_eigen().determinant() - cplx{1.0, 0.0}) > kTolerance) {
            unit_det_ = false;
        }
        if (op_dist(m, id) > kTolerance) {
            nontrivial_ = true;
        }
    }
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            if (op_dist(images_[a] * images_[b], images_[group_->multiply(a, b)]) > kTolerance) {
                throw std::invalid_argument("FiniteRep: not a homomorphism at (" + group_->label(a) +
                                            ", " + group_->label(b) + ")");
            }
        }
    }
}

FiniteRep FiniteRep::from_generators(FiniteGroupPtr group,
                                     const std::vector<std::pair<FiniteGroup::Element, ComplexMatrix>>& gens,
                                     std::string name)
{
    if (!group || gens.empty()) {
        throw std::invalid_argument("FiniteRep::from_generators: need a group and generators");
    }
    const std::size_t order = group->order();
    const std::size_t n = gens.front().second.dim();
    std::vector<ComplexMatrix> images(order);
    std::vector<char> known(order, 0);
    images[group->identity()] = ComplexMatrix::identity(n);
    known[group->identity()] = 1;
    std::deque<FiniteGroup::Element> queue{group->identity()};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (const auto& [g, m] : gens) {
            if (g >= order) {
                throw std::invalid_argument("FiniteRep::from_generators: element out of range");
            }
            const auto next = group->multiply(cur, g);
            if (!known[next]) {
                images[next] = images[cur] * m;
                known[next] = 1;
                queue.push_back(next);
            }
        }
    }
    if (std::find(known.begin(), known.end(), 0) != known.end()) {
        throw std::invalid_argument("FiniteRep::from_generators: elements do not generate the group");
    }
    return FiniteRep(std::move(group), std::move(images), std::move(name));
}

std::size_t commutant_dimension(const FiniteRep& rep)
{
    const std::size_t n = rep.dim();
    const std::size_t n2 = n * n;
    const auto& images = rep.images();
    Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(images.size() * n2),
                                                  static_cast<Eigen::Index>(n2));
    // Unknown X in row-major order; row (i, j) of block g is (P X - X P)_ij.
    for (std::size_t g = 0; g < images.size(); ++g) {
        const ComplexMatrix& p = images[g];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto row = static_cast<Eigen::Index>(g * n2 + i * n + j);
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, static_cast<Eigen::Index>(k * n + j)) += p(i, k);
                    sys(row, static_cast<Eigen::Index>(i * n + k)) -= p(k, j);
                }
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys);
    return null_dimension(svd.singularValues(), n2);
}

std::vector<ComplexMatrix> su_basis(std::size_t n)
{
    const cplx i{0.0, 1.0};
    std::vector<ComplexMatrix> out;
    out.reserve(n * n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            ComplexMatrix a(n);
            a.set(j, k, 1.0);
            a.set(k, j, -1.0);
            out.push_back(std::move(a));
            ComplexMatrix s(n);
            s.set(j, k, i);
            s.set(k, j, i);
            out.push_back(std::move(s));
        }
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        ComplexMatrix d(n);
        d.set(j, j, i);
        d.set(j + 1, j + 1, -i);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<ComplexMatrix> adjoint_fixed_space(const FiniteRep& rep)
{
    const std::size_t n = rep.dim();
    if (n == 1) {
        return {};
    }
    const auto basis = su_basis(n);
    const std::size_t n2 = n * n;
    const auto& images = rep.images();
    Eigen::MatrixXd sys(static_cast<Eigen::Index>(images.size() * 2 * n2),
                        static_cast<Eigen::Index>(basis.size()));
    for (std::size_t g = 0; g < images.size(); ++g) {
        const ComplexMatrix& p = images[g];
        const ComplexMatrix pa = p.adjoint();
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const ComplexMatrix diff = p * basis[c] * pa - basis[c];
            for (std::size_t e = 0; e < n2; ++e) {
                const auto row = static_cast<Eigen::Index>(g * 2 * n2 + 2 * e);
                sys(row, static_cast<Eigen::Index>(c)) = diff.re()[e];
                sys(row + 1, static_cast<Eigen::Index>(c)) = diff.im()[e];
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const auto& v = svd.matrixV();
    std::vector<ComplexMatrix> out;
    for (Eigen::Index col = 0; col < v.cols(); ++col) {
        if (col < sv.size() && sv[col] > kRankThreshold) {
            continue;
        }
        ComplexMatrix x(n);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            ComplexMatrix term = basis[c];
            term *= cplx{v(static_cast<Eigen::Index>(c), col), 0.0};
            x += term;
        }
        out.push_back(std::move(x));
    }
    return out;
}

CriterionVerdict least_dimension_criterion(const FiniteRep& rep,
                                           std::span<const std::size_t> nontrivial_irrep_dims)
{
    if (nontrivial_irrep_dims.empty()) {
        throw std::invalid_argument("least_dimension_criterion: empty dimension list");
    }
    if (std::find(nontrivial_irrep_dims.begin(), nontrivial_irrep_dims.end(), 0u) !=
        nontrivial_irrep_dims.end()) {
        throw std::invalid_argument("least_dimension_criterion: dimensions must be positive");
    }
    CriterionVerdict v{};
    v.commutant_dim = commutant_dimension(rep);
    v.irreducible = v.commutant_dim == 1;
    v.fixed_space_dim = adjoint_fixed_space(rep).size();
    v.nontrivial = rep.nontrivial();
    v.min_nontrivial_dim = *std::min_element(nontrivial_irrep_dims.begin(), nontrivial_irrep_dims.end());
    v.least_dimension = v.nontrivial && rep.dim() <= v.min_nontrivial_dim;
    v.guarantee = v.irreducible && v.least_dimension;
    v.conclusion = v.guarantee ? "uniformly_discrete" : "inconclusive";
    return v;
}

std::vector<ComplexMatrix> dihedral_so3(std::size_t m)
{
    if (m < 2) {
        throw std::invalid_argument("dihedral_so3: axis order must be at least 2");
    }
    const ComplexMatrix flip = ComplexMatrix::from_rows({{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}});
    std::vector<ComplexMatrix> rot;
    for (std::size_t j = 0; j < m; ++j) {
        rot.push_back(rotation_z(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m)));
    }
    std::vector<ComplexMatrix> out = rot;
    for (const auto& r : rot) {
        out.push_back(r * flip);
    }
    return out;
}

std::vector<DihedralStep> dihedral_chain_demo(std::size_t n0, int k)
{
    if (n0 < 3 || k < 1) {
        throw std::invalid_argument("dihedral_chain_demo: need n0 >= 3 and k >= 1");
    }
    if (k >= 30 || (n0 << k) > kDihedralMaxAxisOrder) {
        throw std::length_error("dihedral_chain_demo: n0 * 2^k exceeds " +
                                std::to_string(kDihedralMaxAxisOrder));
    }
    constexpr double kSame = 1e-10;
    std::vector<DihedralStep> out;
    std::vector<ComplexMatrix> prev;
    for (int j = 0; j <= k; ++j) {
        const std::size_t m = n0 << j;
        const auto elems = dihedral_so3(m);
        DihedralStep step{m, elems.size(), 0.0, false, true};

        double min_ell = 0.0;
        bool have = false;
        for (const auto& e : elems) {
            const double l = cstar::ell_op(e);
            if (l > kSame && (!have || l < min_ell)) {
                min_ell = l;
                have = true;
            }
        }
        step.min_nonzero_ell = min_ell;

        auto is_member = [&](const ComplexMatrix& x) {
            return std::any_of(elems.begin(), elems.end(),
                               [&](const ComplexMatrix& y) { return op_dist(x, y) <= kSame; });
        };
        cstar::ClosureOptions opts;
        opts.cap = 4 * elems.size();
        const auto closure = cstar::group_closure({elems[1], elems[m]}, opts);
        if (const auto* g = std::get_if<cstar::MatrixGroup>(&closure)) {
            step.closed = g->order() == elems.size() &&
                          std::all_of(g->elements().begin(), g->elements().end(), is_member);
        }
        for (const auto& p : prev) {
            if (!is_member(p)) {
                step.contains_previous = false;
                break;
            }
        }
        out.push_back(step);
        prev = elems;
    }
    return out;
}

FiniteRep alt5_icosahedral()
{
    auto g = words::groups::alternating5();
    // Half-turn about the edge midpoint axis (phi^2, 1, phi) and the
    // three-fold rotation cycling the coordinate axes.
    const double phi = std::numbers::phi;
    const double axis[3] = {phi * phi, 1.0, phi};
    const double norm2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
    ComplexMatrix half_turn(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            half_turn.set(i, j, 2.0 * axis[i] * axis[j] / norm2 - (i == j ? 1.0 : 0.0));
        }
    }
    const ComplexMatrix three_fold =
        ComplexMatrix::from_rows({{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
    const auto a = require_label(*g, "(12)(34)");
    const auto b = require_label(*g, "(135)");
    return FiniteRep::from_generators(g, {{a, half_turn}, {b, three_fold}}, "alt5_icosahedral");
}

FiniteRep quaternion_su2()
{
    auto g = words::groups::quaternion();
    const cplx i{0.0, 1.0};
    return FiniteRep::from_generators(
        g,
        {{require_label(*g, "i"), ComplexMatrix::from_rows({{i, 0.0}, {0.0, -i}})},
         {require_label(*g, "j"), ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}})}},
        "quaternion_su2");
}

FiniteRep cyclic_su2(std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("cyclic_su2: n must be at least 2");
    }
    auto g = words::groups::cyclic(n);
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(n));
    const std::vector<cplx> d{w, std::conj(w)};
    return FiniteRep::from_generators(g, {{require_label(*g, "r1"), ComplexMatrix::diagonal(d)}},
                                      "cyclic" + std::to_string(n) + "_su2");
}

FiniteRep trivial_rep(FiniteGroupPtr group, std::size_t n)
{
    if (!group || n == 0) {
        throw std::invalid_argument("trivial_rep: need a group and n >= 1");
    }
    std::vector<ComplexMatrix> images(group->order(), ComplexMatrix::identity(n));
    std::string name = "trivial_" + group->name() + "_" + std::to_string(n);
    return FiniteRep(std::move(group), std::move(images), std::move(name));
}

FiniteRep direct_sum(const FiniteRep& a, const FiniteRep& b)
{
    if (a.group_ptr() != b.group_ptr()) {
        throw std::invalid_argument("direct_sum: representations of different group objects");
    }
    const std::size_t na = a.dim();
    const std::size_t n = na + b.dim();
    std::vector<ComplexMatrix> images;
    images.reserve(a.images().size());
    for (std::size_t g = 0; g < a.images().size(); ++g) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < na; ++j) {
                m.set(i, j, a.image(g)(i, j));
            }
        }
        for (std::size_t i = 0; i < b.dim(); ++i) {
            for (std::size_t j = 0; j < b.dim(); ++j) {
                m.set(na + i, na + j, b.image(g)(i, j));
            }
        }
        images.push_back(std::move(m));
    }
    return FiniteRep(a.group_ptr(), std::move(images), a.name() + "+" + b.name());
}

FiniteGroupPtr group_by_name(const std::string& name)
{
    using namespace words::groups;
    if (name == "alt4") {
        return alternating4();
    }
    if (name == "alt5") {
        return alternating5();
    }
    if (name == "klein4") {
        return klein_four();
    }
    if (name == "quaternion") {
        return quaternion();
    }
    if (name == "sym3") {
        return symmetric3();
    }
    if (name.starts_with("cyclic")) {
        return cyclic(parse_suffix(name, "cyclic"));
    }
    if (name.starts_with("dihedral")) {
        return dihedral(parse_suffix(name, "dihedral"));
    }
    throw std::invalid_argument("unknown group name: " + name);
}

std::vector<RepEntry> parse_rep_catalog(const std::string& json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("rep catalog: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("reps") || !doc["reps"].is_array()) {
        throw std::invalid_argument("rep catalog: expected an object with a \"reps\" array");
    }
    std::vector<RepEntry> out;
    for (const auto& r : doc["reps"]) {
        if (!r.contains("name") || !r.contains("group") || !r.contains("generators")) {
            throw std::invalid_argument("rep catalog: entry needs name, group and generators");
        }
        auto group = group_by_name(r["group"].get<std::string>());
        std::vector<std::pair<FiniteGroup::Element, ComplexMatrix>> gens;
        for (const auto& gen : r["generators"]) {
            std::vector<std::vector<cplx>> rows;
            for (const auto& row : gen.at("matrix")) {
                std::vector<cplx> vals;
                for (const auto& z : row) {
                    if (!z.is_array() || z.size() != 2) {
                        throw std::invalid_argument("rep catalog: entries are [re, im] pairs");
                    }
                    vals.emplace_back(z[0].get<double>(), z[1].get<double>());
                }
                rows.push_back(std::move(vals));
            }
            gens.emplace_back(require_label(*group, gen.at("element").get<std::string>()),
                              ComplexMatrix::from_rows(rows));
        }
        std::vector<std::size_t> dims;
        if (r.contains("dims")) {
            dims = r["dims"].get<std::vector<std::size_t>>();
        }
        out.push_back({FiniteRep::from_generators(std::move(group), gens, r["name"].get<std::string>()),
                       std::move(dims)});
    }
    return out;
}

std::vector<RepEntry> load_rep_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read rep catalog: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rep_catalog(ss.str());
}

} // namespace commlab::pun
