#include "commlab/cli/reports.hpp"

#include <sstream>

namespace commlab::cli {

std::vector<double> default_grid()
{
    return {0.0, 0.25, -0.25, 0.5, -0.5, 0.75, -0.75, 0.9};
}

nlohmann::ordered_json to_json(const RunConfig& c)
{
    ojson j;
    j["command"] = c.command;
    j["seed"] = c.seed;
    j["n"] = c.n;
    j["trials"] = c.trials;
    j["tol"] = c.tol ? ojson(*c.tol) : ojson(nullptr);
    j["out"] = c.out;
    j["format"] = c.format;
    j["catalog"] = c.catalog;
    j["depth"] = c.depth;
    j["require_contraction"] = c.require_contraction;
    j["alpha"] = c.alpha;
    j["alphas"] = c.alphas;
    j["betas"] = c.betas;
    j["n_max"] = c.n_max;
    j["model"] = c.model;
    j["t"] = c.t;
    j["epsilon"] = c.epsilon;
    j["group"] = c.group;
    j["word"] = c.word;
    j["n0"] = c.n0;
    j["k"] = c.k;
    j["report"] = c.report;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j)
{
    RunConfig c;
    try {
        c.command = j.at("command").get<std::string>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.n = j.at("n").get<std::size_t>();
        c.trials = j.at("trials").get<std::size_t>();
        if (!j.at("tol").is_null()) {
            c.tol = j.at("tol").get<double>();
        }
        c.out = j.at("out").get<std::string>();
        c.format = j.at("format").get<std::string>();
        c.catalog = j.at("catalog").get<std::string>();
        c.depth = j.at("depth").get<int>();
        c.require_contraction = j.at("require_contraction").get<bool>();
        c.alpha = j.at("alpha").get<double>();
        c.alphas = j.at("alphas").get<std::vector<double>>();
        c.betas = j.at("betas").get<std::vector<double>>();
        c.n_max = j.at("n_max").get<int>();
        c.model = j.at("model").get<std::string>();
        c.t = j.at("t").get<double>();
        c.epsilon = j.at("epsilon").get<double>();
        c.group = j.at("group").get<std::string>();
        c.word = j.at("word").get<std::string>();
        c.n0 = j.at("n0").get<std::size_t>();
        c.k = j.at("k").get<int>();
        c.report = j.at("report").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    return c;
}

ojson complex_json(std::complex<double> z)
{
    return ojson::array({z.real(), z.imag()});
}

ojson matrix_json(const ComplexMatrix& m)
{
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(complex_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson decay_json(const dynamics::DecayReport& r)
{
    ojson j;
    j["model"] = r.model;
    j["input_trace"] = r.input_trace;
    j["ell_u"] = r.ell_u;
    j["ell_bar_u"] = r.ell_bar_u;
    j["slack"] = r.slack;
    j["dimension"] = r.dimension ? ojson(*r.dimension) : ojson(nullptr);
    j["seed"] = r.seed ? ojson(*r.seed) : ojson(nullptr);
    j["last_expanded_n"] = r.last_expanded_n ? ojson(*r.last_expanded_n) : ojson(nullptr);
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        ojson o;
        o["n"] = row.n;
        o["trace"] = complex_json(row.trace);
        o["ell"] = row.ell;
        o["ell_bar"] = row.ell_bar;
        o["lower"] = row.lower;
        o["upper"] = row.upper;
        o["in_bounds"] = row.in_bounds;
        o["method"] = dynamics::method_name(row.method);
        o["recursion_trace"] = row.recursion_trace ? ojson(*row.recursion_trace) : ojson(nullptr);
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    return j;
}

ojson filter_json(const cstar::FilterReport& r)
{
    ojson j;
    j["threshold"] = r.threshold;
    j["generating_set"] = r.generating_set;
    j["subgroup"] = r.subgroup;
    j["abelian"] = r.abelian;
    j["normal"] = r.normal;
    j["ell"] = r.ell;
    return j;
}

ojson verdict_json(const pun::CriterionVerdict& v)
{
    ojson j;
    j["irreducible"] = v.irreducible;
    j["commutant_dim"] = v.commutant_dim;
    j["fixed_space_dim"] = v.fixed_space_dim;
    j["nontrivial"] = v.nontrivial;
    j["min_nontrivial_dim"] = v.min_nontrivial_dim;
    j["least_dimension"] = v.least_dimension;
    j["guarantee"] = v.guarantee;
    j["conclusion"] = v.conclusion;
    return j;
}

std::string render_report(const RunConfig& cfg, bool passed, ojson result)
{
    ojson j;
    j["tool"] = "commlab";
    j["version"] = COMMLAB_VERSION;
    j["config"] = to_json(cfg);
    j["passed"] = passed;
    j["result"] = std::move(result);
    return j.dump(2) + "\n";
}

std::string render_decay_csv(const RunConfig& cfg, const dynamics::DecayReport& r)
{
    std::ostringstream out;
    out << "# commlab " << COMMLAB_VERSION << "\n";
    out << "# config " << to_json(cfg).dump() << "\n";
    out << "# model " << r.model << " input_trace " << ojson(r.input_trace).dump() << " ell_u "
        << ojson(r.ell_u).dump() << " ell_bar_u " << ojson(r.ell_bar_u).dump() << "\n";
    out << "n,trace_re,trace_im,ell,ell_bar,lower,upper,in_bounds,method,recursion_trace\n";
    // Shortest round-trip formatting, identical to the JSON output.
    auto num = [](double x) { return ojson(x).dump(); };
    for (const auto& row : r.rows) {
        out << row.n << ',' << num(row.trace.real()) << ',' << num(row.trace.imag()) << ','
            << num(row.ell) << ',' << num(row.ell_bar) << ',' << num(row.lower) << ','
            << num(row.upper) << ',' << (row.in_bounds ? "true" : "false") << ','
            << dynamics::method_name(row.method) << ','
            << (row.recursion_trace ? num(*row.recursion_trace) : std::string()) << "\n";
    }
    return out.str();
}

} // namespace commlab::cli
