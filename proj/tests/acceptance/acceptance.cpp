// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "commlab/algebra/algebra_element.hpp"
#include "commlab/algebra/free_product.hpp"
#include "commlab/algebra/walk_trace.hpp"
#include "commlab/cli/commands.hpp"
#include "commlab/cstar/matrix_group.hpp"
#include "commlab/dynamics/decay.hpp"
#include "commlab/pun/rep.hpp"
#include "commlab/simd/kernels.hpp"
#include "commlab/util/parallel.hpp"
#include "commlab/words/mixed_word.hpp"

using namespace commlab;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<double> grid()
{
    return {0.0, 0.25, -0.25, 0.5, -0.5, 0.75, -0.75, 0.9};
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

cli::RunConfig config(const std::string& command)
{
    cli::RunConfig c;
    c.command = command;
    return c;
}

bool report_passed(const cli::CommandOutcome& o)
{
    return o.exit_code == cli::kExitOk && nlohmann::json::parse(o.text).at("passed").get<bool>();
}

template <class F>
void over_grid(F&& f)
{
    const auto amb = algebra::z2_star_z2();
    for (double a : grid()) {
        for (double b : grid()) {
            f(algebra::order_two_unitary(amb, a, 0), algebra::order_two_unitary(amb, b, 1), a, b);
        }
    }
}

Outcome commutator_identity()
{
    double worst = 0.0;
    over_grid([&](const auto& u, const auto& v, double a, double b) {
        const auto tc = algebra::group_commutator(u, v).trace();
        worst = std::max(worst, std::abs(tc - (1.0 - (1.0 - a * a) * (1.0 - b * b))));
    });
    return {worst <= 1e-12, "max deviation " + fmt(worst)};
}

Outcome product_rule()
{
    double worst = 0.0;
    over_grid([&](const auto& u, const auto& v, double, double) {
        worst = std::max(worst, std::abs((u * v).trace() - u.trace() * v.trace()));
    });
    return {worst <= 1e-12, "max deviation " + fmt(worst)};
}

Outcome two_sided_bound()
{
    constexpr double slack = 1e-10;
    std::size_t bad = 0;
    double worst_eq = 0.0;
    over_grid([&](const auto& u, const auto& v, double, double) {
        const auto c = algebra::group_commutator(u, v);
        const double l = algebra::ell(c);
        const double base = algebra::ell_bar(u) * algebra::ell_bar(v);
        if (!(base / std::numbers::sqrt2 <= l + slack && l <= base * std::numbers::sqrt2 + slack)) {
            ++bad;
        }
        worst_eq = std::max(worst_eq, std::abs(algebra::ell_bar(c) - l));
    });
    return {bad == 0 && worst_eq <= slack, std::to_string(bad) + " bound violations, max |ell_bar - ell| " + fmt(worst_eq)};
}

Outcome decay_chain()
{
    std::size_t rows = 0;
    std::size_t bad = 0;
    double worst_rec = 0.0;
    for (double alpha : {0.76, 0.8, 0.9, 0.95}) {
        const auto rep = dynamics::decay_curve_exact(alpha, 6);
        const auto rec = dynamics::trace_recursion(alpha, 6);
        for (const auto& r : rep.rows) {
            ++rows;
            const bool in = r.lower <= r.ell + 1e-10 && r.ell <= r.upper + 1e-10;
            bad += in ? 0 : 1;
            worst_rec = std::max(worst_rec, std::abs(r.trace - rec[static_cast<std::size_t>(r.n - 1)]));
        }
    }
    return {rows == 24 && bad == 0 && worst_rec <= 1e-10,
            std::to_string(rows) + " rows, " + std::to_string(bad) + " outside bounds, max recursion deviation " +
                fmt(worst_rec)};
}

Outcome small_element()
{
    const auto s = dynamics::find_small_element(0.9, 0.1);
    const double s2 = std::sqrt(1.0 - 0.9 * 0.9);
    const auto tau = algebra::exact_word_trace(s.word, 0.9, std::complex<double>(0.0, s2));
    const double ell = dynamics::ell_of_trace(tau);
    return {s.n <= 6 && ell < 0.1, "n = " + std::to_string(s.n) + ", re-evaluated ell " + fmt(ell)};
}

Outcome matrix_freeness()
{
    double worst256 = 0.0;
    double worst1024 = 0.0;
    bool ok = true;
    for (auto [n, trials, tol, worst] : {std::tuple{256, 10, 0.05, &worst256}, std::tuple{1024, 3, 0.02, &worst1024}}) {
        auto c = config("freeness");
        c.n = static_cast<std::size_t>(n);
        c.trials = static_cast<std::size_t>(trials);
        c.tol = tol;
        const auto out = cli::run_command(c);
        ok = ok && report_passed(out);
        const auto report = nlohmann::json::parse(out.text);
        for (const auto& row : report.at("result").at("trials")) {
            *worst = std::max({*worst, row.at("d1").get<double>(), row.at("d2").get<double>()});
        }
    }
    return {ok && worst256 <= 0.05 && worst1024 <= 0.02,
            "max d at N=256 " + fmt(worst256) + ", at N=1024 " + fmt(worst1024)};
}

Outcome contraction()
{
    bool ok = true;
    std::string detail;
    for (std::size_t n : {2, 4, 8}) {
        auto c = config("contraction");
        c.n = n;
        c.trials = 1000;
        const auto out = cli::run_command(c);
        const auto res = nlohmann::json::parse(out.text).at("result");
        ok = ok && report_passed(out) && res.at("violations").get<std::size_t>() == 0;
        detail += "U(" + std::to_string(n) + ") violations " + std::to_string(res.at("violations").get<std::size_t>()) +
                  " min margin " + fmt(res.at("min_margin").get<double>()) + "; ";
    }
    return {ok, detail};
}

Outcome zassenhaus_filters()
{
    auto c = config("zassenhaus");
    c.t = 0.5;
    const auto out = cli::run_command(c);
    bool ok = report_passed(out);
    std::size_t checked = 0;
    bool cyclic_nontrivial = false;
    const auto report = nlohmann::json::parse(out.text);
    for (const auto& g : report.at("result").at("groups")) {
        ok = ok && g.at("closed").get<bool>() && g.at("filter").at("abelian").get<bool>() &&
             g.at("filter").at("normal").get<bool>();
        if (g.at("name") == "cyclic13") {
            cyclic_nontrivial = g.at("filter").at("subgroup").size() > 1;
        }
        ++checked;
    }
    return {ok && checked == 4 && cyclic_nontrivial,
            std::to_string(checked) + " groups, cyclic filter nontrivial: " + (cyclic_nontrivial ? "yes" : "no")};
}

Outcome heisenberg()
{
    double min_ell = 4.0;
    bool ok = true;
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto h = cstar::heisenberg_irrep(n);
        min_ell = std::min(min_ell, h.min_ell);
        ok = ok && h.nontrivial && h.min_ell >= std::sqrt(3.0) - 1e-9;
    }
    return {ok, "min ell over n = 2..12: " + fmt(min_ell)};
}

Outcome mixed_identities()
{
    bool ok = true;
    std::size_t groups = 0;
    for (const auto& g : words::groups::test_catalog()) {
        const auto w = words::MixedWord::variable(g, static_cast<std::int64_t>(g->exponent()));
        ok = ok && words::is_mixed_identity(w, *g).is_identity;
        ++groups;
    }
    const auto s3 = words::groups::symmetric3();
    const auto t = words::MixedWord::variable(s3);
    const auto a = words::MixedWord::constant(s3, *s3->find("(12)"));
    const auto w = words::commutator(t, a * t * a.inverse());
    const auto v = words::is_mixed_identity(w, *s3);
    bool refuted = !v.is_identity && v.witness && v.value;
    if (refuted) {
        refuted = w.evaluate(*v.witness) == *v.value && *v.value != s3->identity();
    }
    return {ok && refuted, std::to_string(groups) + " groups satisfy t^exp(G); Sym3 witness " +
                               (refuted ? s3->label(*v.witness) : std::string("none"))};
}

Outcome pun_checks()
{
    const std::vector<std::size_t> a5dims{3, 3, 4, 5};
    const auto va = pun::least_dimension_criterion(pun::alt5_icosahedral(), a5dims);
    const std::vector<std::size_t> z8dims{1, 1, 1, 1, 1, 1, 1};
    const auto vz = pun::least_dimension_criterion(pun::cyclic_su2(8), z8dims);
    const auto steps = pun::dihedral_chain_demo(6, 4);
    bool decreasing = std::abs(steps.front().min_nonzero_ell - 1.0) <= 1e-12 &&
                      std::abs(steps[1].min_nonzero_ell - 0.5176) <= 1e-4;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        decreasing = decreasing && steps[i].min_nonzero_ell < steps[i - 1].min_nonzero_ell;
    }
    const bool ok = va.commutant_dim == 1 && va.fixed_space_dim == 0 && va.guarantee && vz.fixed_space_dim == 1 &&
                    !vz.guarantee && decreasing;
    return {ok, "Alt5 commutant " + std::to_string(va.commutant_dim) + " fixed " + std::to_string(va.fixed_space_dim) +
                    "; Z/8 fixed " + std::to_string(vz.fixed_space_dim) + "; dihedral last ell " +
                    fmt(steps.back().min_nonzero_ell)};
}

Outcome determinism()
{
    std::vector<cli::RunConfig> configs;
    {
        auto c = config("freeness");
        c.n = 256;
        c.trials = 10;
        configs.push_back(c);
    }
    for (std::size_t n : {2, 4, 8}) {
        auto c = config("contraction");
        c.n = n;
        c.trials = 1000;
        configs.push_back(c);
    }
    {
        auto c = config("dynamics");
        c.model = "matrix";
        c.n = 256;
        c.alpha = 0.9;
        c.n_max = 4;
        configs.push_back(c);
        c.format = "csv";
        configs.push_back(c);
    }
    for (const char* name : {"verify-identity", "zassenhaus", "heisenberg", "compact", "dihedral"}) {
        configs.push_back(config(name));
    }
    {
        auto c = config("dynamics");
        configs.push_back(c);
        auto m = config("mif");
        m.group = "sym3";
        m.depth = 3;
        configs.push_back(m);
    }

    const std::size_t saved = thread_count();
    const simd::Isa active = simd::kernels().isa;
    std::size_t mismatches = 0;
    for (const auto& c : configs) {
        set_thread_count(1);
        const auto first = cli::run_command(c).text;
        const auto second = cli::run_command(c).text;
        set_thread_count(3);
        const auto threaded = cli::run_command(c).text;
        std::string other_isa = first;
        for (auto isa : simd::available_isas()) {
            simd::set_active_isa(isa);
            if (cli::run_command(c).text != first) {
                other_isa.clear();
            }
        }
        simd::set_active_isa(active);
        if (first != second || first != threaded || other_isa != first) {
            ++mismatches;
        }
    }
    set_thread_count(saved);
    return {mismatches == 0,
            std::to_string(configs.size()) + " reports, " + std::to_string(mismatches) +
                " differ across runs, thread counts or kernels"};
}

} // namespace

int main()
{
    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
        double budget_s; // 0: no runtime budget
    };
    const std::vector<Criterion> criteria{
        {"commutator trace identity", commutator_identity, 1.0},
        {"freeness product rule", product_rule, 1.0},
        {"two-sided commutator bound", two_sided_bound, 1.0},
        {"decay chain", decay_chain, 120.0},
        {"epsilon-small element", small_element, 120.0},
        {"matrix-model freeness", matrix_freeness, 60.0},
        {"contraction inequality", contraction, 60.0},
        {"Gamma_1/2 filters", zassenhaus_filters, 10.0},
        {"Heisenberg bound", heisenberg, 1.0},
        {"mixed identities", mixed_identities, 1.0},
        {"PU(n) criteria and dihedral chain", pun_checks, 10.0},
        {"determinism", determinism, 0.0},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_s > 0.0 && secs > criteria[i].budget_s) {
            o.pass = false;
            o.detail += " (over the " + fmt(criteria[i].budget_s) + " s budget)";
        }
        std::printf("%s criterion %2zu  %-34s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
