#include "qslb/trace.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "qslb/coherent.hpp"
#include "qslb/fock.hpp"
#include "qslb/phase_space.hpp"
#include "qslb/quadrature.hpp"
#include "qslb/specfun.hpp"

namespace qslb {

namespace {

constexpr int kColumns = 11;

// Closed-form speed bound of a thermalizing Fock state, through the radial
// phase-space functionals (no elementary form exists for general nbar_R).
double fock_speed(const FockScenario& s, const DampingClock& c) {
    const PhysParams& p = s.params;
    const int M = s.M;
    const DampingClock c0 = clock(p, 0.0);
    auto cf0 = [&](std::complex<double> lam) {
        return fock_cf(M, PhaseSpacePoint{lam}, c0);
    };
    auto cft = [&](std::complex<double> lam) {
        return fock_cf(M, PhaseSpacePoint{lam}, c);
    };
    auto dcft = [&](std::complex<double> lam) -> std::complex<double> {
        const double x = std::norm(lam);
        const double y = c.eta * x;
        return -p.gamma * c.eta * x * std::exp(-(0.5 + c.nbar_T) * x) *
               (p.nbar_R * laguerre(M, y) + laguerre_deriv(M, y));
    };
    return std::sqrt(phase_space_functionals(cf0, cft, dcft).v_tilde_sq);
}

// The fock averaged speeds have no elementary closed form, so the trace
// accumulates the time integrals interval by interval; each interval is
// smooth, making the fixed 16-node panels exact at machine level while
// touching the radial functionals far less often than per-row averaging.
std::vector<EvolutionSample> fock_trace(const RunConfig& cfg, const PhysParams& p, double T) {
    const FockScenario s{p, cfg.M};
    const double vF0 = static_qsl_fock(p, cfg.M);
    const GaussLegendre gl16(16);
    auto speed = [&](double tp) { return fock_speed(s, clock(p, tp)); };
    auto root_purity = [&](double tp) { return std::sqrt(purity_fock(s, clock(p, tp))); };

    std::vector<EvolutionSample> rows;
    rows.reserve(cfg.steps + 1);
    double accV = 0.0, accP = 0.0, tPrev = 0.0;
    for (int k = 0; k <= cfg.steps; ++k) {
        const double t = T * k / cfg.steps;
        const DampingClock c = clock(p, t);
        EvolutionSample r;
        r.t = t;
        r.fidelity_F = fidelity_fock(s, c);
        r.purity_P = purity_fock(s, c);
        r.hs_dist_G = hs_distance_from_fp(r.fidelity_F, r.purity_P);
        r.v_tilde = fock_speed(s, c);
        if (k == 0) {
            r.vbar_F = vF0;
            r.vbar_tilde = r.v_tilde;
        } else {
            accV += gl16.integrate(speed, tPrev, t);
            accP += gl16.integrate(root_purity, tPrev, t);
            r.vbar_tilde = accV / t;
            r.vbar_F = vF0 * accP / t;
        }
        const QsltFragment q =
            qslt_bundle(t, r.fidelity_F, r.hs_dist_G, r.vbar_F, r.vbar_tilde, vF0);
        r.tau_F = q.tau_F;
        r.tau_F_min = q.tau_F_min;
        r.tau_tilde_F = q.tau_tilde_F;
        r.tau_tilde_G = q.tau_tilde_G;
        rows.push_back(r);
        tPrev = t;
    }
    return rows;
}

EvolutionSample analytic_row_vacuum(const PhysParams& p, double t) {
    const DampingClock c = clock(p, t);
    const VacuumBundle b = vacuum_bundle(p, c);
    const CoherentScenario s{p, 0.0};
    EvolutionSample r;
    r.t = t;
    r.fidelity_F = b.F0;
    r.purity_P = b.P0;
    r.hs_dist_G = b.G0;
    r.v_tilde = speed_bound(s, c, SpeedBoundMode::exact);
    r.vbar_F = avg_speed_vF(s, c);
    r.vbar_tilde = b.vtilbar0;
    r.tau_F_min = b.tauF0;
    r.tau_F = (1.0 - b.F0) / r.vbar_F;
    r.tau_tilde_F = b.ttauF0;
    r.tau_tilde_G = b.ttauG0;
    return r;
}

EvolutionSample analytic_row_coherent(const RunConfig& cfg, const PhysParams& p, double t) {
    const CoherentScenario s{p, cfg.alpha};
    const DampingClock c = clock(p, t);
    EvolutionSample r = qslt_coherent(s, c);
    if (cfg.picture == Picture::schroedinger) {
        // The raw fidelity oscillates; rebuild the distance and the bound
        // times around it.
        r.fidelity_F = fidelity_exact(s, c);
        r.hs_dist_G = hs_distance_from_fp(r.fidelity_F, r.purity_P);
        const double vF0 = static_qsl_coherent(p, std::abs(cfg.alpha));
        const QsltFragment q =
            qslt_bundle(t, r.fidelity_F, r.hs_dist_G, r.vbar_F, r.vbar_tilde, vF0);
        r.tau_F = q.tau_F;
        r.tau_F_min = q.tau_F_min;
        r.tau_tilde_F = q.tau_tilde_F;
        r.tau_tilde_G = q.tau_tilde_G;
    }
    return r;
}

void scaled_values(const EvolutionSample& r, double gamma, double out[kColumns]) {
    out[0] = gamma * r.t;
    out[1] = r.fidelity_F;
    out[2] = r.purity_P;
    out[3] = r.hs_dist_G;
    out[4] = r.v_tilde / gamma;
    out[5] = r.vbar_F / gamma;
    out[6] = r.vbar_tilde / gamma;
    out[7] = gamma * r.tau_F_min;
    out[8] = gamma * r.tau_F;
    out[9] = gamma * r.tau_tilde_F;
    out[10] = gamma * r.tau_tilde_G;
}

} // namespace

void validate(const RunConfig& cfg) {
    if (!(cfg.gamma > 0.0)) throw ConfigError("gamma must be positive");
    if (!(cfg.omega_over_gamma > 0.0)) throw ConfigError("omega-ratio must be positive");
    if (cfg.nbar_R < 0.0) throw ConfigError("nbar must be non-negative");
    if (!(cfg.t_max > 0.0)) throw ConfigError("tmax must be positive");
    if (cfg.steps < 1 || cfg.steps > 100000) throw ConfigError("steps must be in [1, 100000]");
    if (cfg.scenario == Scenario::fock && cfg.M < 0)
        throw ConfigError("M must be non-negative");
    if (!(cfg.tol > 0.0)) throw ConfigError("tol must be positive");
    if (cfg.dim < 0) throw ConfigError("dim must be non-negative");
    if (cfg.out.empty()) throw ConfigError("output path must not be empty");
    const bool startsInVacuum =
        cfg.scenario == Scenario::vacuum ||
        (cfg.scenario == Scenario::coherent && cfg.alpha == std::complex<double>(0.0)) ||
        (cfg.scenario == Scenario::fock && cfg.M == 0);
    if (startsInVacuum && cfg.nbar_R == 0.0)
        throw ConfigError("initial state equals the steady state; nothing evolves");
}

RunConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    RunConfig cfg;
    for (const auto& [key, val] : j.items()) {
        try {
            if (key == "scenario") {
                const std::string s = val.get<std::string>();
                if (s == "coherent") cfg.scenario = Scenario::coherent;
                else if (s == "vacuum") cfg.scenario = Scenario::vacuum;
                else if (s == "fock") cfg.scenario = Scenario::fock;
                else throw ConfigError("unknown scenario: " + s);
            } else if (key == "alpha_re") {
                cfg.alpha = {val.get<double>(), cfg.alpha.imag()};
            } else if (key == "alpha_im") {
                cfg.alpha = {cfg.alpha.real(), val.get<double>()};
            } else if (key == "M") {
                cfg.M = val.get<int>();
            } else if (key == "nbar") {
                cfg.nbar_R = val.get<double>();
            } else if (key == "gamma") {
                cfg.gamma = val.get<double>();
            } else if (key == "omega_ratio") {
                cfg.omega_over_gamma = val.get<double>();
            } else if (key == "tmax") {
                cfg.t_max = val.get<double>();
            } else if (key == "steps") {
                cfg.steps = val.get<int>();
            } else if (key == "picture") {
                const std::string s = val.get<std::string>();
                if (s == "interaction") cfg.picture = Picture::interaction;
                else if (s == "schroedinger") cfg.picture = Picture::schroedinger;
                else throw ConfigError("unknown picture: " + s);
            } else if (key == "out") {
                cfg.out = val.get<std::string>();
            } else if (key == "tol") {
                cfg.tol = val.get<double>();
            } else if (key == "dim") {
                cfg.dim = val.get<int>();
            } else {
                throw ConfigError("unknown config key: " + key);
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError("bad value for config key '" + key + "': " + e.what());
        }
    }
    validate(cfg);
    return cfg;
}

PhysParams params_of(const RunConfig& cfg) {
    return make_params(cfg.gamma, cfg.omega_over_gamma * cfg.gamma, cfg.nbar_R);
}

std::vector<EvolutionSample> analytic_trace(const RunConfig& cfg) {
    validate(cfg);
    const PhysParams p = params_of(cfg);
    const double T = cfg.t_max / p.gamma;
    if (cfg.scenario == Scenario::fock) return fock_trace(cfg, p, T);
    std::vector<EvolutionSample> rows;
    rows.reserve(cfg.steps + 1);
    for (int k = 0; k <= cfg.steps; ++k) {
        const double t = T * k / cfg.steps;
        rows.push_back(cfg.scenario == Scenario::coherent ? analytic_row_coherent(cfg, p, t)
                                                          : analytic_row_vacuum(p, t));
    }
    return rows;
}

std::vector<EvolutionSample> oracle_trace(const RunConfig& cfg) {
    validate(cfg);
    const PhysParams p = params_of(cfg);
    const double aAbs = cfg.scenario == Scenario::coherent ? std::abs(cfg.alpha) : 0.0;
    const int M = cfg.scenario == Scenario::fock ? cfg.M : 0;

    OracleConfig ocfg;
    ocfg.dim = cfg.dim > 0 ? cfg.dim : suggest_dim(aAbs, M, cfg.nbar_R);
    ocfg.picture = cfg.picture;
    ocfg.step = 1e-3;
    if (cfg.nbar_R >= 2.0 || ocfg.dim >= 60) ocfg.step = 5e-4;
    if (cfg.picture == Picture::schroedinger && cfg.omega_over_gamma >= 10.0)
        ocfg.step = 1e-4;

    TruncatedState init;
    switch (cfg.scenario) {
        case Scenario::coherent: init = build_initial_coherent(cfg.alpha, ocfg.dim); break;
        case Scenario::vacuum: init = build_initial_fock(0, ocfg.dim); break;
        case Scenario::fock: init = build_initial_fock(cfg.M, ocfg.dim); break;
    }

    // March one output row at a time.  Each row interval is subdivided into
    // 8 sub-points and the averaged speeds are accumulated with two 5-point
    // Boole panels; the early transient decays like exp(-Gamma_m t), and
    // plain Simpson on the row grid would leave visible quadrature error.
    const double T = cfg.t_max / p.gamma;
    const double dt = T / cfg.steps;
    const double vF0 = static_qsl_numeric(init, p);

    std::vector<EvolutionSample> rows(cfg.steps + 1);
    TruncatedState cur = init;
    OracleObservables last = observables(init, init, p);
    double intV = 0.0, intP = 0.0;

    auto fill_row = [&](EvolutionSample& r, double t, const OracleObservables& o) {
        r.t = t;
        r.fidelity_F = o.F;
        r.purity_P = o.P;
        r.hs_dist_G = o.G;
        r.v_tilde = o.v_tilde;
        const QsltFragment q = qslt_bundle(t, o.F, o.G, r.vbar_F, r.vbar_tilde, vF0);
        r.tau_F = q.tau_F;
        r.tau_F_min = q.tau_F_min;
        r.tau_tilde_F = q.tau_tilde_F;
        r.tau_tilde_G = q.tau_tilde_G;
    };

    rows[0].vbar_F = vF0;
    rows[0].vbar_tilde = last.v_tilde;
    fill_row(rows[0], 0.0, last);

    std::vector<double> grid(9);
    double vs[9], rootP[9];
    for (int k = 1; k <= cfg.steps; ++k) {
        const double t0 = (k - 1) * dt;
        for (int j = 0; j <= 8; ++j) grid[j] = t0 + dt * j / 8.0;
        const std::vector<TruncatedState> seg = propagate(cur, p, grid, ocfg);
        vs[0] = last.v_tilde;
        rootP[0] = std::sqrt(std::max(0.0, last.P));
        for (int j = 1; j <= 8; ++j) {
            const OracleObservables o = observables(init, seg[j], p);
            vs[j] = o.v_tilde;
            rootP[j] = std::sqrt(std::max(0.0, o.P));
            if (j == 8) last = o;
        }
        for (int j0 : {0, 4}) {
            const double w = dt / 180.0;
            intV += w * (7.0 * vs[j0] + 32.0 * vs[j0 + 1] + 12.0 * vs[j0 + 2] +
                         32.0 * vs[j0 + 3] + 7.0 * vs[j0 + 4]);
            intP += w * (7.0 * rootP[j0] + 32.0 * rootP[j0 + 1] + 12.0 * rootP[j0 + 2] +
                         32.0 * rootP[j0 + 3] + 7.0 * rootP[j0 + 4]);
        }
        cur = seg[8];
        rows[k].vbar_tilde = intV / grid[8];
        rows[k].vbar_F = vF0 * intP / grid[8];
        fill_row(rows[k], grid[8], last);
    }
    return rows;
}

const char* const kCsvHeader =
    "gamma_t,fidelity,purity,hs_dist,v_tilde,vbar_F,vbar_tilde,"
    "tau_F_min,tau_F,tau_tilde_F,tau_tilde_G";

void write_csv(std::ostream& os, const std::vector<EvolutionSample>& rows, double gamma) {
    os << kCsvHeader << '\n';
    char buf[64];
    double vals[kColumns];
    for (const EvolutionSample& r : rows) {
        scaled_values(r, gamma, vals);
        for (int i = 0; i < kColumns; ++i) {
            std::snprintf(buf, sizeof buf, "%.15g", vals[i]);
            os << (i ? "," : "") << buf;
        }
        os << '\n';
    }
}

void write_csv_file(const std::string& path, const std::vector<EvolutionSample>& rows,
                    double gamma) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open output file: " + path);
    write_csv(os, rows, gamma);
    if (!os) throw ConfigError("write failed: " + path);
}

std::vector<std::vector<double>> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open CSV file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty CSV file: " + path);
    if (line != kCsvHeader) throw ConfigError("unexpected CSV header in " + path);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        row.reserve(kColumns);
        const char* s = line.c_str();
        char* end = nullptr;
        for (;;) {
            const double v = std::strtod(s, &end);
            if (end == s) throw ConfigError("malformed CSV row in " + path);
            row.push_back(v);
            s = end;
            if (*s == ',') ++s;
            else break;
        }
        if (*s != '\0' || row.size() != static_cast<size_t>(kColumns))
            throw ConfigError("malformed CSV row in " + path);
        rows.push_back(std::move(row));
    }
    return rows;
}

CompareReport compare_traces(const std::vector<EvolutionSample>& analytic,
                             const std::vector<EvolutionSample>& oracle, double gamma) {
    if (analytic.size() != oracle.size())
        throw std::invalid_argument("compare_traces: row count mismatch");
    CompareReport rep;
    {
        std::stringstream ss(kCsvHeader);
        std::string col;
        while (std::getline(ss, col, ',')) rep.columns.push_back(col);
    }
    rep.max_abs_err.assign(kColumns, 0.0);
    double a[kColumns], b[kColumns];
    for (size_t i = 0; i < analytic.size(); ++i) {
        scaled_values(analytic[i], gamma, a);
        scaled_values(oracle[i], gamma, b);
        for (int c = 0; c < kColumns; ++c)
            rep.max_abs_err[c] = std::max(rep.max_abs_err[c], std::abs(a[c] - b[c]));
    }
    for (int c = 0; c < kColumns; ++c) rep.worst = std::max(rep.worst, rep.max_abs_err[c]);
    return rep;
}

void print_report(std::ostream& os, const CompareReport& r) {
    for (size_t i = 0; i < r.columns.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%11.4e", r.max_abs_err[i]);
        os << "  " << r.columns[i];
        for (size_t pad = r.columns[i].size(); pad < 12; ++pad) os << ' ';
        os << buf << '\n';
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", r.worst);
    os << "  worst       " << buf << '\n';
}

namespace {

RunConfig figure_config(Scenario sc, double nbar, double tmax, int steps) {
    RunConfig cfg;
    cfg.scenario = sc;
    cfg.nbar_R = nbar;
    cfg.t_max = tmax;
    cfg.steps = steps;
    return cfg;
}

std::string write_fig_trace(const RunConfig& cfg, const std::filesystem::path& path) {
    write_csv_file(path.string(), analytic_trace(cfg), cfg.gamma);
    return path.string();
}

std::string write_gnuplot(const std::filesystem::path& path, const std::string& body) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open output file: " + path.string());
    os << body;
    return path.string();
}

// Exact and smoothed coherent-state fidelities on a dense grid, the one data
// set whose columns fall outside the trace schema.
std::string write_envelope_csv(const std::filesystem::path& path, const RunConfig& cfg) {
    const PhysParams p = params_of(cfg);
    const CoherentScenario s{p, cfg.alpha};
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open output file: " + path.string());
    os << "gamma_t,f_exact,f_plus,f_minus,f_zero,f_arith,f_period\n";
    char buf[64];
    for (int k = 0; k <= cfg.steps; ++k) {
        const double t = cfg.t_max * k / (p.gamma * cfg.steps);
        const DampingClock c = clock(p, t);
        const double vals[7] = {
            p.gamma * t,
            fidelity_exact(s, c),
            fidelity_smoothed(SmoothedFidelity::plus, s, c),
            fidelity_smoothed(SmoothedFidelity::minus, s, c),
            fidelity_smoothed(SmoothedFidelity::zero, s, c),
            fidelity_smoothed(SmoothedFidelity::arithmetic, s, c),
            fidelity_smoothed(SmoothedFidelity::period_avg, s, c),
        };
        for (int i = 0; i < 7; ++i) {
            std::snprintf(buf, sizeof buf, "%.15g", vals[i]);
            os << (i ? "," : "") << buf;
        }
        os << '\n';
    }
    if (!os) throw ConfigError("write failed: " + path.string());
    return path.string();
}

} // namespace

std::vector<std::string> run_figure(int n, const std::string& out_dir) {
    namespace fs = std::filesystem;
    const fs::path dir(out_dir.empty() ? "." : out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + dir.string());

    std::vector<std::string> files;
    const std::string common =
        "set datafile separator ','\nset terminal pngcairo size 900,650\nset key top left\n";

    switch (n) {
        case 1: {
            RunConfig cfg = figure_config(Scenario::coherent, 0.0, 3.0, 300);
            cfg.alpha = {2.0, 0.0};
            files.push_back(write_fig_trace(cfg, dir / "fig1_coherent_qslt.csv"));
            files.push_back(write_gnuplot(
                dir / "fig1.gp",
                common + "set output 'fig1.png'\n"
                         "set xlabel 'gamma t'\nset ylabel 'gamma tau'\n"
                         "plot 'fig1_coherent_qslt.csv' using 1:8 w l title 'tau_F^min', \\\n"
                         "     '' using 1:10 w l title 'tau~_F', \\\n"
                         "     '' using 1:11 w l title 'tau~_G', \\\n"
                         "     '' using 1:1 w l dt 2 title 't'\n"));
            break;
        }
        case 2: {
            files.push_back(write_fig_trace(figure_config(Scenario::vacuum, 0.5, 3.0, 300),
                                            dir / "fig2a_vacuum_nbar_0.5.csv"));
            for (double nb : {2.0, 4.0, 10.0}) {
                char name[64];
                std::snprintf(name, sizeof name, "fig2b_vacuum_nbar_%g.csv", nb);
                files.push_back(
                    write_fig_trace(figure_config(Scenario::vacuum, nb, 3.0, 300), dir / name));
            }
            files.push_back(write_gnuplot(
                dir / "fig2.gp",
                common + "set output 'fig2.png'\nset multiplot layout 1,2\n"
                         "set xlabel 'gamma t'\nset ylabel 'gamma tau'\n"
                         "plot 'fig2a_vacuum_nbar_0.5.csv' using 1:8 w l title 'tau_F^min', \\\n"
                         "     '' using 1:10 w l title 'tau~_F', \\\n"
                         "     '' using 1:11 w l title 'tau~_G', \\\n"
                         "     '' using 1:1 w l dt 2 title 't'\n"
                         "plot 'fig2a_vacuum_nbar_0.5.csv' using 1:11 w l title 'nbar 0.5', \\\n"
                         "     'fig2b_vacuum_nbar_2.csv' using 1:11 w l title 'nbar 2', \\\n"
                         "     'fig2b_vacuum_nbar_4.csv' using 1:11 w l title 'nbar 4', \\\n"
                         "     'fig2b_vacuum_nbar_10.csv' using 1:11 w l title 'nbar 10', \\\n"
                         "     '' using 1:1 w l dt 2 title 't'\nunset multiplot\n"));
            break;
        }
        case 3:
        case 4: {
            const char* pre = n == 3 ? "fig3a" : "fig4";
            for (int M : {1, 2, 3, 5}) {
                RunConfig cfg = figure_config(Scenario::fock, 0.5, 5.0, 250);
                cfg.M = M;
                char name[64];
                std::snprintf(name, sizeof name, "%s_fock_M%d.csv", pre, M);
                files.push_back(write_fig_trace(cfg, dir / name));
            }
            if (n == 3) {
                for (double nb : {0.0, 0.5, 1.5, 3.0}) {
                    RunConfig cfg = figure_config(Scenario::fock, nb, 5.0, 250);
                    cfg.M = 2;
                    char name[64];
                    std::snprintf(name, sizeof name, "fig3b_fock_M2_nbar_%g.csv", nb);
                    files.push_back(write_fig_trace(cfg, dir / name));
                }
                files.push_back(write_gnuplot(
                    dir / "fig3.gp",
                    common +
                        "set output 'fig3.png'\nset multiplot layout 1,2\n"
                        "set xlabel 'gamma t'\nset ylabel 'F_M'\n"
                        "plot for [M in '1 2 3 5'] 'fig3a_fock_M'.M.'.csv' "
                        "using 1:2 w l title 'M='.M\n"
                        "set ylabel 'P_M'\n"
                        "plot for [nb in '0 0.5 1.5 3'] 'fig3b_fock_M2_nbar_'.nb.'.csv' "
                        "using 1:3 w l title 'nbar='.nb\nunset multiplot\n"));
            } else {
                files.push_back(write_gnuplot(
                    dir / "fig4.gp",
                    common + "set output 'fig4.png'\n"
                             "set xlabel 'gamma t'\nset ylabel 'G_M'\n"
                             "plot for [M in '1 2 3 5'] 'fig4_fock_M'.M.'.csv' "
                             "using 1:4 w l title 'M='.M\n"));
            }
            break;
        }
        case 5: {
            for (int M : {1, 2}) {
                RunConfig cfg = figure_config(Scenario::fock, 0.0, 4.0, 200);
                cfg.M = M;
                char name[64];
                std::snprintf(name, sizeof name, "fig5_fock_M%d.csv", M);
                files.push_back(write_fig_trace(cfg, dir / name));
            }
            files.push_back(write_gnuplot(
                dir / "fig5.gp",
                common +
                    "set output 'fig5.png'\nset multiplot layout 2,1\n"
                    "set xlabel 'gamma t'\nset ylabel 'v / gamma'\n"
                    "plot 'fig5_fock_M1.csv' using 1:7 w l title 'vbar~ M=1', \\\n"
                    "     'fig5_fock_M2.csv' using 1:7 w l title 'vbar~ M=2', \\\n"
                    "     sqrt(5) w l dt 2 title 'v_F(0) M=1', \\\n"
                    "     sqrt(13) w l dt 3 title 'v_F(0) M=2'\n"
                    "set ylabel 'gamma tau'\n"
                    "plot 'fig5_fock_M1.csv' using 1:8 w l title 'tau_F^min M=1', \\\n"
                    "     'fig5_fock_M2.csv' using 1:8 w l title 'tau_F^min M=2', \\\n"
                    "     'fig5_fock_M1.csv' using 1:10 w l title 'tau~_F M=1', \\\n"
                    "     'fig5_fock_M2.csv' using 1:10 w l title 'tau~_F M=2', \\\n"
                    "     'fig5_fock_M1.csv' using 1:11 w l title 'tau~_G M=1', \\\n"
                    "     'fig5_fock_M2.csv' using 1:11 w l title 'tau~_G M=2', \\\n"
                    "     x w l dt 2 title 't'\nunset multiplot\n"));
            break;
        }
        case 6: {
            RunConfig cfg = figure_config(Scenario::coherent, 0.0, 2.0, 2000);
            cfg.alpha = {std::sqrt(2.0), 0.0};
            cfg.picture = Picture::schroedinger;
            files.push_back(write_envelope_csv(dir / "fig6_envelopes.csv", cfg));
            files.push_back(write_gnuplot(
                dir / "fig6.gp",
                common + "set output 'fig6.png'\n"
                         "set xlabel 'gamma t'\nset ylabel 'F'\n"
                         "plot 'fig6_envelopes.csv' using 1:2 w l lw 0.5 title 'exact', \\\n"
                         "     '' using 1:3 w l title 'plus', \\\n"
                         "     '' using 1:4 w l title 'minus', \\\n"
                         "     '' using 1:5 w l title 'zero', \\\n"
                         "     '' using 1:6 w l title 'arithmetic', \\\n"
                         "     '' using 1:7 w l title 'period avg'\n"));
            break;
        }
        default:
            throw ConfigError("figure index must be 1..6");
    }
    return files;
}

} // namespace qslb
