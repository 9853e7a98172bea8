#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commlab/cli/commands.hpp"
#include "commlab/simd/kernels.hpp"
#include "commlab/util/parallel.hpp"

using commlab::cli::RunConfig;

namespace {

struct Flags {
    RunConfig cfg;
    double tol = 0.0;
    std::size_t threads = 1;
    std::string simd;
};

void add_common(CLI::App* sub, Flags& f)
{
    sub->add_option("--out", f.cfg.out, "Output path, '-' for stdout")->capture_default_str();
    sub->add_option("--tol", f.tol, "Tolerance override (command-specific default)");
}

void add_seeded(CLI::App* sub, Flags& f)
{
    sub->add_option("--seed", f.cfg.seed, "Master seed")->capture_default_str();
    sub->add_option("--n", f.cfg.n, "Matrix dimension")->capture_default_str();
    sub->add_option("--trials", f.cfg.trials, "Number of trials")->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    Flags f;
    CLI::App app{"commlab: free-probability and discrete unitary group experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(COMMLAB_VERSION));
    app.add_option("--threads", f.threads, "Worker threads (reports do not depend on this)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--simd", f.simd, "Kernel instruction set: scalar or avx2 (default: widest available)");

    auto* verify = app.add_subcommand("verify-identity", "Exact commutator trace identity on an alpha x beta grid");
    add_common(verify, f);
    verify->add_option("--alphas", f.cfg.alphas, "Comma-separated alpha grid (default 0,+-0.25,+-0.5,+-0.75,0.9)")
        ->delimiter(',');
    verify->add_option("--betas", f.cfg.betas, "Comma-separated beta grid (default as alphas)")->delimiter(',');

    auto* dyn = app.add_subcommand("dynamics", "Decay of ell(w_n(u, v)) against its two-sided bounds");
    add_common(dyn, f);
    add_seeded(dyn, f);
    dyn->add_option("--alpha", f.cfg.alpha, "Trace of u")->capture_default_str();
    dyn->add_option("--n-max", f.cfg.n_max, "Last n of the word sequence")->capture_default_str();
    dyn->add_option("--model", f.cfg.model, "exact or matrix")->capture_default_str();
    dyn->add_option("--format", f.cfg.format, "json or csv")->capture_default_str();
    dyn->add_flag("--require-contraction", f.cfg.require_contraction, "Reject alpha <= 3/4");

    auto* small = app.add_subcommand("small", "Least n with ell(w_n(u, v)) < epsilon in the exact model");
    add_common(small, f);
    small->add_option("--alpha", f.cfg.alpha, "Trace of u, in (3/4, 1)")->capture_default_str();
    small->add_option("--epsilon", f.cfg.epsilon, "Target length")->capture_default_str();

    auto* zas = app.add_subcommand("zassenhaus", "Closure and Gamma_t filter for each catalog group");
    add_common(zas, f);
    zas->add_option("--catalog", f.cfg.catalog, "Group catalog JSON (default: bundled groups.json)");
    zas->add_option("--t", f.cfg.t, "Filter threshold")->capture_default_str();

    auto* mif = app.add_subcommand("mif", "Search for mixed identities over a finite group");
    add_common(mif, f);
    mif->add_option("--group", f.cfg.group, "Group table file or builtin name (sym3, quaternion, cyclicN, ...)")
        ->required();
    mif->add_option("--depth", f.cfg.depth, "Maximum total t-length")->capture_default_str();
    mif->add_option("--word", f.cfg.word, "Also check this word, e.g. \"t . (12) . t . (12)\"");

    auto* compact = app.add_subcommand("compact", "Commutant, adjoint fixed space and least-dimension verdicts");
    add_common(compact, f);
    compact->add_option("--catalog", f.cfg.catalog, "Rep catalog JSON (default: bundled reps.json)");

    auto* dih = app.add_subcommand("dihedral", "Ascending chain of dihedral subgroups of SO(3)");
    add_common(dih, f);
    dih->add_option("--n0", f.cfg.n0, "Initial rotation order")->capture_default_str();
    dih->add_option("--k", f.cfg.k, "Number of doublings")->capture_default_str();

    auto* fr = app.add_subcommand("freeness", "Trace identities for independent Haar unitaries");
    add_common(fr, f);
    add_seeded(fr, f);

    auto* con = app.add_subcommand("contraction", "ell_op([U, V]) <= 2 ell_op(U) ell_op(V) for Haar pairs");
    add_common(con, f);
    add_seeded(con, f);

    auto* heis = app.add_subcommand("heisenberg", "Clock and shift generators for n = 2..n-max");
    add_common(heis, f);
    heis->add_option("--n-max", f.cfg.n_max, "Largest dimension")->capture_default_str();

    auto* rep = app.add_subcommand("replay", "Rerun the config embedded in a report and compare bytes");
    add_common(rep, f);
    rep->add_option("--report", f.cfg.report, "Report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : commlab::cli::kExitUsage;
    }

    for (auto* sub : app.get_subcommands()) {
        f.cfg.command = sub->get_name();
        if (sub->count("--tol") > 0) {
            f.cfg.tol = f.tol;
        }
    }

    try {
        commlab::set_thread_count(f.threads);
        if (!f.simd.empty()) {
            bool found = false;
            for (auto isa : commlab::simd::available_isas()) {
                if (commlab::simd::isa_name(isa) == f.simd) {
                    commlab::simd::set_active_isa(isa);
                    found = true;
                }
            }
            if (!found) {
                throw commlab::cli::UsageError("--simd: unavailable instruction set " + f.simd);
            }
        }
        const auto outcome = commlab::cli::run_command(f.cfg);
        commlab::cli::write_atomic(f.cfg.out, outcome.text);
        return outcome.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "commlab: " << e.what() << "\n";
        return commlab::cli::kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "commlab: " << e.what() << "\n";
        return commlab::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "commlab: " << e.what() << "\n";
        return commlab::cli::kExitCheckFailed;
    }
}
