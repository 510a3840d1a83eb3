// Command-line front end: closed-form traces, oracle traces, closed-form vs
// oracle comparison, and figure data generation.
//
// Exit codes: 0 success, 2 configuration error, 3 comparison over tolerance,
// 4 truncated-basis overflow.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "qslb/trace.hpp"

namespace {

struct CliOpts {
    std::string scenario, picture, config, out;
    double alpha_re = 0.0, alpha_im = 0.0, nbar = 0.0, gamma = 1.0;
    double omega_ratio = 10.0, tmax = 3.0, tol = 1e-6;
    int M = 1, steps = 200, dim = 0;
    bool oracle = false;

    CLI::Option* o_scenario = nullptr;
    CLI::Option* o_picture = nullptr;
    CLI::Option* o_config = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_alpha_re = nullptr;
    CLI::Option* o_alpha_im = nullptr;
    CLI::Option* o_nbar = nullptr;
    CLI::Option* o_gamma = nullptr;
    CLI::Option* o_omega_ratio = nullptr;
    CLI::Option* o_tmax = nullptr;
    CLI::Option* o_tol = nullptr;
    CLI::Option* o_M = nullptr;
    CLI::Option* o_steps = nullptr;
    CLI::Option* o_dim = nullptr;
};

void add_common(CLI::App* cmd, CliOpts& o) {
    o.o_config = cmd->add_option("-c,--config", o.config, "JSON config file; flags override it");
    o.o_scenario = cmd->add_option("-s,--scenario", o.scenario, "coherent, vacuum or fock")
                       ->check(CLI::IsMember({"coherent", "vacuum", "fock"}));
    o.o_alpha_re = cmd->add_option("--alpha-re", o.alpha_re, "coherent amplitude, real part");
    o.o_alpha_im = cmd->add_option("--alpha-im", o.alpha_im, "coherent amplitude, imaginary part");
    o.o_M = cmd->add_option("-M,--photons", o.M, "initial Fock level");
    o.o_nbar = cmd->add_option("--nbar", o.nbar, "reservoir occupation");
    o.o_gamma = cmd->add_option("--gamma", o.gamma, "damping rate");
    o.o_omega_ratio = cmd->add_option("--omega-ratio", o.omega_ratio, "omega / gamma");
    o.o_tmax = cmd->add_option("--tmax", o.tmax, "trace length in units of 1/gamma");
    o.o_steps = cmd->add_option("--steps", o.steps, "number of output intervals");
    o.o_picture = cmd->add_option("--picture", o.picture, "interaction or schroedinger")
                      ->check(CLI::IsMember({"interaction", "schroedinger"}));
    o.o_out = cmd->add_option("-o,--out", o.out, "output CSV path");
    o.o_tol = cmd->add_option("--tol", o.tol, "comparison tolerance");
    o.o_dim = cmd->add_option("--dim", o.dim, "truncated basis size (0 = automatic)");
}

qslb::RunConfig build_config(const CliOpts& o) {
    qslb::RunConfig cfg;
    if (o.o_config->count()) cfg = qslb::config_from_json_file(o.config);
    if (o.o_scenario->count()) {
        if (o.scenario == "coherent") cfg.scenario = qslb::Scenario::coherent;
        else if (o.scenario == "vacuum") cfg.scenario = qslb::Scenario::vacuum;
        else cfg.scenario = qslb::Scenario::fock;
    }
    if (o.o_alpha_re->count()) cfg.alpha = {o.alpha_re, cfg.alpha.imag()};
    if (o.o_alpha_im->count()) cfg.alpha = {cfg.alpha.real(), o.alpha_im};
    if (o.o_M->count()) cfg.M = o.M;
    if (o.o_nbar->count()) cfg.nbar_R = o.nbar;
    if (o.o_gamma->count()) cfg.gamma = o.gamma;
    if (o.o_omega_ratio->count()) cfg.omega_over_gamma = o.omega_ratio;
    if (o.o_tmax->count()) cfg.t_max = o.tmax;
    if (o.o_steps->count()) cfg.steps = o.steps;
    if (o.o_picture->count())
        cfg.picture = o.picture == "interaction" ? qslb::Picture::interaction
                                                 : qslb::Picture::schroedinger;
    if (o.o_out->count()) cfg.out = o.out;
    if (o.o_tol->count()) cfg.tol = o.tol;
    if (o.o_dim->count()) cfg.dim = o.dim;
    qslb::validate(cfg);
    return cfg;
}

int cmd_run(const CliOpts& o) {
    const qslb::RunConfig cfg = build_config(o);
    const std::vector<qslb::EvolutionSample> rows =
        o.oracle ? qslb::oracle_trace(cfg) : qslb::analytic_trace(cfg);
    qslb::write_csv_file(cfg.out, rows, cfg.gamma);
    std::cout << "wrote " << cfg.out << " (" << rows.size() << " rows)\n";
    return 0;
}

int cmd_compare(const CliOpts& o) {
    const qslb::RunConfig cfg = build_config(o);
    const std::vector<qslb::EvolutionSample> ana = qslb::analytic_trace(cfg);
    const std::vector<qslb::EvolutionSample> orc = qslb::oracle_trace(cfg);

    std::filesystem::path p(cfg.out);
    const std::filesystem::path oraclePath =
        p.parent_path() / (p.stem().string() + "_oracle" + p.extension().string());
    qslb::write_csv_file(cfg.out, ana, cfg.gamma);
    qslb::write_csv_file(oraclePath.string(), orc, cfg.gamma);

    const qslb::CompareReport rep = qslb::compare_traces(ana, orc, cfg.gamma);
    std::cout << "per-column max |closed form - oracle| (scaled units):\n";
    qslb::print_report(std::cout, rep);
    if (!rep.within(cfg.tol)) {
        std::cout << "FAIL: worst deviation " << rep.worst << " exceeds tol " << cfg.tol << "\n";
        return 3;
    }
    std::cout << "OK: all columns within " << cfg.tol << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* th = std::getenv("QSL_BOSON_THREADS")) {
#ifdef _OPENMP
        const int n = std::atoi(th);
        if (n > 0) omp_set_num_threads(n);
#else
        (void)th;
#endif
    }

    CLI::App app{"Speed-limit traces for a damped bosonic mode"};
    app.require_subcommand(1);

    CliOpts runOpts, cmpOpts;
    CLI::App* run = app.add_subcommand("run", "write one trace as CSV");
    add_common(run, runOpts);
    run->add_flag("--oracle", runOpts.oracle, "integrate the master equation instead of "
                                              "evaluating the closed forms");
    CLI::App* cmp = app.add_subcommand("compare", "closed forms vs oracle, column by column");
    add_common(cmp, cmpOpts);

    int figureIndex = 0;
    std::string figureDir = "figures";
    CLI::App* fig = app.add_subcommand("figure", "write figure data and a gnuplot script");
    fig->add_option("-n,--index", figureIndex, "figure number")->required();
    fig->add_option("-d,--out-dir", figureDir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return cmd_run(runOpts);
        if (cmp->parsed()) return cmd_compare(cmpOpts);
        for (const std::string& f : qslb::run_figure(figureIndex, figureDir))
            std::cout << "wrote " << f << "\n";
        return 0;
    } catch (const qslb::TruncationError& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return 4;
    } catch (const qslb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
