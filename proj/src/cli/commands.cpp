#include "commlab/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <system_error>

#include "commlab/algebra/algebra_element.hpp"
#include "commlab/algebra/free_product.hpp"
#include "commlab/cli/reports.hpp"
#include "commlab/model/unitary.hpp"
#include "commlab/util/parallel.hpp"
#include "commlab/util/rng.hpp"
#include "commlab/words/mixed_word.hpp"

namespace commlab::cli {

namespace {

constexpr std::size_t kListedIdentities = 100;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double tol_or(const RunConfig& cfg, double fallback)
{
    if (cfg.tol && !(*cfg.tol >= 0.0)) {
        throw UsageError("--tol must be non-negative");
    }
    return cfg.tol.value_or(fallback);
}

CommandOutcome verify_identity(const RunConfig& cfg)
{
    const auto alphas = cfg.alphas.empty() ? default_grid() : cfg.alphas;
    const auto betas = cfg.betas.empty() ? default_grid() : cfg.betas;
    for (double x : alphas) {
        if (!(std::abs(x) < 1.0)) {
            throw UsageError("grid values must satisfy |x| < 1");
        }
    }
    for (double x : betas) {
        if (!(std::abs(x) < 1.0)) {
            throw UsageError("grid values must satisfy |x| < 1");
        }
    }
    const double tol = tol_or(cfg, 1e-12);
    constexpr double kBoundSlack = 1e-10;
    const auto amb = algebra::z2_star_z2();

    bool passed = true;
    ojson rows = ojson::array();
    for (double a : alphas) {
        for (double b : betas) {
            const auto u = algebra::order_two_unitary(amb, a, 0);
            const auto v = algebra::order_two_unitary(amb, b, 1);
            const auto comm = algebra::group_commutator(u, v);
            const cplx tc = comm.trace();
            const double rhs = 1.0 - (1.0 - a * a) * (1.0 - b * b);
            const double dev = std::abs(tc - rhs);
            const double prod_dev = std::abs((u * v).trace() - u.trace() * v.trace());
            const double lc = algebra::ell(comm);
            const double lbc = algebra::ell_bar(comm);
            const double base = algebra::ell_bar(u) * algebra::ell_bar(v);
            const double lower = base / std::numbers::sqrt2;
            const double upper = base * std::numbers::sqrt2;
            const bool in_bounds = lower <= lc + kBoundSlack && lc <= upper + kBoundSlack;
            const bool ok = dev <= tol && prod_dev <= tol && in_bounds && std::abs(lbc - lc) <= kBoundSlack;
            passed = passed && ok;

            ojson r;
            r["alpha"] = a;
            r["beta"] = b;
            r["trace_commutator"] = complex_json(tc);
            r["closed_form"] = rhs;
            r["deviation"] = dev;
            r["product_deviation"] = prod_dev;
            r["ell_commutator"] = lc;
            r["ell_bar_commutator"] = lbc;
            r["lower"] = lower;
            r["upper"] = upper;
            r["pass"] = ok;
            rows.push_back(std::move(r));
        }
    }
    ojson result;
    result["tolerance"] = tol;
    result["rows"] = std::move(rows);
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

CommandOutcome dynamics_cmd(const RunConfig& cfg)
{
    if (cfg.n_max < 1) {
        throw UsageError("--n-max must be at least 1");
    }
    if (!(std::abs(cfg.alpha) < 1.0)) {
        throw UsageError("--alpha must satisfy |alpha| < 1");
    }
    if (cfg.require_contraction && !(cfg.alpha > 0.75)) {
        throw UsageError("--require-contraction needs alpha > 3/4");
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        throw UsageError("--format must be json or csv");
    }

    dynamics::DecayReport rep;
    bool passed = true;
    if (cfg.model == "exact") {
        dynamics::ExactOptions opts;
        opts.slack = tol_or(cfg, 1e-10);
        rep = dynamics::decay_curve_exact(cfg.alpha, cfg.n_max, opts);
        for (const auto& row : rep.rows) {
            const bool rec_ok =
                !row.recursion_trace || std::abs(row.trace - *row.recursion_trace) <= 1e-10;
            passed = passed && row.in_bounds && rec_ok;
        }
    } else if (cfg.model == "matrix") {
        if (cfg.n < 2) {
            throw UsageError("--n must be at least 2 for the matrix model");
        }
        const auto u = model::unitary_with_trace(cfg.alpha, cfg.n, derive_seed(cfg.seed, 0));
        const auto v = model::sample_haar(cfg.n, derive_seed(cfg.seed, 1));
        rep = dynamics::decay_curve_matrix(u.unitary.matrix(), v.matrix(), cfg.n_max, tol_or(cfg, 0.05));
        rep.seed = cfg.seed;
    } else {
        throw UsageError("--model must be exact or matrix");
    }
    const int code = passed ? kExitOk : kExitCheckFailed;
    if (cfg.format == "csv") {
        return {code, render_decay_csv(cfg, rep)};
    }
    return {code, render_report(cfg, passed, decay_json(rep))};
}

CommandOutcome small_cmd(const RunConfig& cfg)
{
    if (!(cfg.alpha > 0.75 && cfg.alpha < 1.0) || !(cfg.epsilon > 0.0)) {
        throw UsageError("need 3/4 < alpha < 1 and epsilon > 0");
    }
    const auto s = dynamics::find_small_element(cfg.alpha, cfg.epsilon);
    const bool passed = s.ell < cfg.epsilon;
    ojson result;
    result["alpha"] = cfg.alpha;
    result["epsilon"] = cfg.epsilon;
    result["n"] = s.n;
    result["word"] = s.word.to_string();
    result["letter_length"] = s.word.letter_length();
    result["trace"] = complex_json(s.trace);
    result["ell"] = s.ell;
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

std::string catalog_path(const RunConfig& cfg, const char* bundled)
{
    return cfg.catalog.empty() ? data_dir() + "/" + bundled : cfg.catalog;
}

CommandOutcome zassenhaus(const RunConfig& cfg)
{
    if (!(cfg.t >= 0.0)) {
        throw UsageError("--t must be non-negative");
    }
    std::vector<cstar::CatalogEntry> entries;
    try {
        entries = cstar::load_catalog(catalog_path(cfg, "groups.json"));
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    const bool check_filters = cfg.t <= 0.5;
    bool passed = true;
    ojson groups = ojson::array();
    for (const auto& e : entries) {
        ojson g;
        g["name"] = e.name;
        g["dimension"] = e.generators.front().dim();
        const auto closure = cstar::group_closure(e.generators);
        if (const auto* nc = std::get_if<cstar::NonClosure>(&closure)) {
            g["closed"] = false;
            g["reason"] = cstar::reason_name(nc->reason);
            g["witness_ell"] = nc->ell;
            g["elements_found"] = nc->elements_found;
            g["witness"] = matrix_json(nc->element);
        } else {
            const auto& mg = std::get<cstar::MatrixGroup>(closure);
            const auto f = cstar::gamma_filter(mg, cfg.t);
            g["closed"] = true;
            g["order"] = mg.order();
            g["generators"] = mg.generators();
            g["filter"] = filter_json(f);
            if (check_filters && !(f.abelian && f.normal)) {
                passed = false;
            }
        }
        groups.push_back(std::move(g));
    }
    ojson result;
    result["t"] = cfg.t;
    result["groups"] = std::move(groups);
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

words::FiniteGroupPtr load_group(const std::string& name)
{
    if (name.empty()) {
        throw UsageError("--group is required");
    }
    if (std::filesystem::exists(name)) {
        return std::make_shared<const words::FiniteGroup>(words::FiniteGroup::load(name));
    }
    try {
        return pun::group_by_name(name);
    } catch (const std::invalid_argument&) {
        throw UsageError("--group is neither a readable file nor a builtin group: " + name);
    }
}

CommandOutcome mif(const RunConfig& cfg)
{
    if (cfg.depth < 1) {
        throw UsageError("--depth must be at least 1");
    }
    const auto group = load_group(cfg.group);
    ojson result;
    result["group"] = group->name();
    result["order"] = group->order();
    result["exponent"] = group->exponent();
    result["depth"] = cfg.depth;

    std::size_t found = 0;
    ojson listed = ojson::array();
    const std::size_t visited = words::enumerate_mixed_words(group, cfg.depth, [&](const words::MixedWord& w) {
        if (words::is_mixed_identity(w, *group).is_identity) {
            if (found < kListedIdentities) {
                listed.push_back(w.to_string());
            }
            ++found;
        }
        return true;
    });
    result["words_visited"] = visited;
    result["identities_found"] = found;
    result["identities"] = std::move(listed);
    result["summary"] = found == 0 ? "no identity found up to depth " + std::to_string(cfg.depth)
                                   : std::to_string(found) + " identities up to depth " + std::to_string(cfg.depth);

    if (!cfg.word.empty()) {
        const auto w = words::MixedWord::parse(group, cfg.word);
        const auto v = words::is_mixed_identity(w, *group);
        ojson wj;
        wj["word"] = w.to_string();
        wj["is_identity"] = v.is_identity;
        wj["witness"] = v.witness ? ojson(group->label(*v.witness)) : ojson(nullptr);
        wj["value"] = v.value ? ojson(group->label(*v.value)) : ojson(nullptr);
        result["checked_word"] = std::move(wj);
    }
    return {kExitOk, render_report(cfg, true, std::move(result))};
}

CommandOutcome compact(const RunConfig& cfg)
{
    std::vector<pun::RepEntry> entries;
    try {
        entries = pun::load_rep_catalog(catalog_path(cfg, "reps.json"));
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    bool passed = true;
    ojson reps = ojson::array();
    for (const auto& e : entries) {
        ojson r;
        r["name"] = e.rep.name();
        r["group"] = e.rep.group().name();
        r["dimension"] = e.rep.dim();
        r["unit_determinant"] = e.rep.unit_determinant();
        if (e.dims.empty()) {
            const std::size_t comm = pun::commutant_dimension(e.rep);
            const std::size_t fixed = pun::adjoint_fixed_space(e.rep).size();
            r["commutant_dim"] = comm;
            r["fixed_space_dim"] = fixed;
            r["verdict"] = nullptr;
            passed = passed && ((fixed == 0) == (comm == 1));
        } else {
            const auto v = pun::least_dimension_criterion(e.rep, e.dims);
            r["dims"] = e.dims;
            r["verdict"] = verdict_json(v);
            passed = passed && ((v.fixed_space_dim == 0) == (v.commutant_dim == 1));
        }
        reps.push_back(std::move(r));
    }
    ojson result;
    result["reps"] = std::move(reps);
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

CommandOutcome dihedral(const RunConfig& cfg)
{
    std::vector<pun::DihedralStep> steps;
    try {
        steps = pun::dihedral_chain_demo(cfg.n0, cfg.k);
    } catch (const std::length_error& e) {
        throw UsageError(e.what());
    }
    bool passed = true;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        const bool decreasing = i == 0 || s.min_nonzero_ell < steps[i - 1].min_nonzero_ell;
        passed = passed && decreasing && s.closed && s.contains_previous;
        ojson r;
        r["axis_order"] = s.axis_order;
        r["group_order"] = s.group_order;
        r["min_nonzero_ell"] = s.min_nonzero_ell;
        r["closed"] = s.closed;
        r["contains_previous"] = s.contains_previous;
        rows.push_back(std::move(r));
    }
    ojson result;
    result["n0"] = cfg.n0;
    result["k"] = cfg.k;
    result["steps"] = std::move(rows);
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

CommandOutcome freeness(const RunConfig& cfg)
{
    if (cfg.n < 1 || cfg.trials < 1) {
        throw UsageError("--n and --trials must be positive");
    }
    const double tol = tol_or(cfg, 0.05);
    bool passed = true;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        const auto u = model::sample_haar(cfg.n, derive_seed(cfg.seed, 2 * i));
        const auto v = model::sample_haar(cfg.n, derive_seed(cfg.seed, 2 * i + 1));
        const auto f = model::freeness_report(u.matrix(), v.matrix());
        const bool ok = f.product_deviation <= tol && f.commutator_deviation <= tol;
        passed = passed && ok;
        ojson r;
        r["trial"] = i;
        r["trace_u"] = complex_json(f.trace_u);
        r["trace_v"] = complex_json(f.trace_v);
        r["trace_uv"] = complex_json(f.trace_uv);
        r["trace_commutator"] = complex_json(f.trace_commutator);
        r["d1"] = f.product_deviation;
        r["d2"] = f.commutator_deviation;
        r["pass"] = ok;
        rows.push_back(std::move(r));
    }
    ojson result;
    result["dimension"] = cfg.n;
    result["tolerance"] = tol;
    result["trials"] = std::move(rows);
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

CommandOutcome contraction(const RunConfig& cfg)
{
    if (cfg.n < 1 || cfg.trials < 1) {
        throw UsageError("--n and --trials must be positive");
    }
    const double tol = tol_or(cfg, 1e-9);
    std::vector<cstar::CommutatorBound> out(cfg.trials);
    parallel_for(cfg.trials, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto u = model::sample_haar(cfg.n, derive_seed(cfg.seed, 2 * i));
            const auto v = model::sample_haar(cfg.n, derive_seed(cfg.seed, 2 * i + 1));
            out[i] = cstar::commutator_ineq_check(u.matrix(), v.matrix());
        }
    });
    std::size_t violations = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].margin < -tol) {
            ++violations;
        }
        if (out[i].margin < out[worst].margin) {
            worst = i;
        }
    }
    ojson result;
    result["dimension"] = cfg.n;
    result["trials"] = cfg.trials;
    result["tolerance"] = tol;
    result["violations"] = violations;
    result["min_margin"] = out[worst].margin;
    result["min_margin_trial"] = worst;
    result["min_margin_lhs"] = out[worst].lhs;
    result["min_margin_rhs"] = out[worst].rhs;
    const bool passed = violations == 0;
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

CommandOutcome heisenberg(const RunConfig& cfg)
{
    if (cfg.n_max < 2) {
        throw UsageError("--n-max must be at least 2");
    }
    const double tol = tol_or(cfg, 1e-9);
    bool passed = true;
    ojson rows = ojson::array();
    for (int n = 2; n <= cfg.n_max; ++n) {
        const auto h = cstar::heisenberg_irrep(static_cast<std::size_t>(n));
        const bool ok = h.nontrivial && h.scalar_residual <= tol && h.min_ell >= std::sqrt(3.0) - tol;
        passed = passed && ok;
        ojson r;
        r["n"] = n;
        r["commutator_scalar"] = complex_json(h.commutator_scalar);
        r["scalar_residual"] = h.scalar_residual;
        r["ell_clock"] = h.ell_clock;
        r["ell_shift"] = h.ell_shift;
        r["min_ell"] = h.min_ell;
        r["pass"] = ok;
        rows.push_back(std::move(r));
    }
    ojson result;
    result["rows"] = std::move(rows);
    return {passed ? kExitOk : kExitCheckFailed, render_report(cfg, passed, std::move(result))};
}

CommandOutcome replay(const RunConfig& cfg)
{
    if (cfg.report.empty()) {
        throw UsageError("--report is required");
    }
    const std::string original = read_file(cfg.report);
    nlohmann::json embedded;
    try {
        if (original.starts_with("#")) {
            const std::string marker = "# config ";
            const auto pos = original.find(marker);
            if (pos == std::string::npos) {
                throw UsageError("CSV report without a config line");
            }
            const auto end = original.find('\n', pos);
            embedded = nlohmann::json::parse(original.substr(pos + marker.size(), end - pos - marker.size()));
        } else {
            embedded = nlohmann::json::parse(original).at("config");
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("report: ") + e.what());
    }
    const RunConfig inner = config_from_json(embedded);
    if (inner.command == "replay") {
        throw UsageError("cannot replay a replay report");
    }
    const auto rerun = run_command(inner);
    const bool identical = rerun.text == original;
    ojson result;
    result["report"] = cfg.report;
    result["command"] = inner.command;
    result["identical"] = identical;
    result["bytes"] = original.size();
    return {identical ? kExitOk : kExitCheckFailed, render_report(cfg, identical, std::move(result))};
}

} // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"verify-identity", "dynamics", "small",   "zassenhaus",
                                                "mif",             "compact",  "dihedral", "freeness",
                                                "contraction",     "heisenberg", "replay"};
    return names;
}

CommandOutcome run_command(const RunConfig& cfg)
{
    const std::string& c = cfg.command;
    if (c == "verify-identity") {
        return verify_identity(cfg);
    }
    if (c == "dynamics") {
        return dynamics_cmd(cfg);
    }
    if (c == "small") {
        return small_cmd(cfg);
    }
    if (c == "zassenhaus") {
        return zassenhaus(cfg);
    }
    if (c == "mif") {
        return mif(cfg);
    }
    if (c == "compact") {
        return compact(cfg);
    }
    if (c == "dihedral") {
        return dihedral(cfg);
    }
    if (c == "freeness") {
        return freeness(cfg);
    }
    if (c == "contraction") {
        return contraction(cfg);
    }
    if (c == "heisenberg") {
        return heisenberg(cfg);
    }
    if (c == "replay") {
        return replay(cfg);
    }
    throw UsageError("unknown command: " + c);
}

void write_atomic(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    const std::filesystem::path target{path};
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw UsageError("cannot write " + tmp.string());
        }
        out << text;
        out.flush();
        if (!out) {
            throw UsageError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw UsageError("cannot rename into " + path + ": " + ec.message());
    }
}

std::string data_dir()
{
    if (const char* env = std::getenv("COMMLAB_DATA_DIR")) {
        return env;
    }
    return COMMLAB_DATA_DIR;
}

} // namespace commlab::cli
