#pragma once

// Scenario runner: assembles evolution traces from the closed forms and from
// the oracle, writes CSV, compares the two, and emits figure data sets.

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qslb/lindblad.hpp"
#include "qslb/qsl.hpp"

namespace qslb {

enum class Scenario { coherent, vacuum, fock };

struct RunConfig {
    Scenario scenario = Scenario::coherent;
    std::complex<double> alpha = {2.0, 0.0}; // coherent only
    int M = 1;                               // fock only
    double nbar_R = 0.0;
    double gamma = 1.0;
    double omega_over_gamma = 10.0;
    double t_max = 3.0; // in units of 1/gamma
    int steps = 200;
    Picture picture = Picture::interaction;
    std::string out = "trace.csv";
    double tol = 1e-6;
    int dim = 0; // 0 = choose automatically
};

// Thrown for invalid configurations; the CLI maps it to its config-error
// exit code.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const RunConfig& cfg);
RunConfig config_from_json_file(const std::string& path);
PhysParams params_of(const RunConfig& cfg);

// Closed-form trace on the uniform grid gamma_t = 0 .. gamma t_max.
// Averaged speeds use the displayed closed forms where those exist and
// 64-node Gauss-Legendre averages of the closed-form integrand otherwise.
std::vector<EvolutionSample> analytic_trace(const RunConfig& cfg);

// Oracle trace on the same grid.  Averaged speeds integrate the per-step
// samples by composite Simpson.  Throws TruncationError if the basis is too
// small.
std::vector<EvolutionSample> oracle_trace(const RunConfig& cfg);

// CSV with the fixed column schema, 15 significant digits, dimensionless
// gamma-scaled values (gamma t, v/gamma, gamma tau).
extern const char* const kCsvHeader;
void write_csv(std::ostream& os, const std::vector<EvolutionSample>& rows, double gamma);
void write_csv_file(const std::string& path, const std::vector<EvolutionSample>& rows,
                    double gamma);
std::vector<std::vector<double>> read_csv_file(const std::string& path);

// Per-column maximum absolute deviation between the two traces.
struct CompareReport {
    std::vector<std::string> columns;
    std::vector<double> max_abs_err;
    double worst = 0.0;
    bool within(double tol) const { return worst < tol; }
};
CompareReport compare_traces(const std::vector<EvolutionSample>& analytic,
                             const std::vector<EvolutionSample>& oracle, double gamma);
void print_report(std::ostream& os, const CompareReport& r);

// Figure data: one CSV per curve with the published parameter sets, plus a
// gnuplot script that plots them.  Returns the list of files written.
std::vector<std::string> run_figure(int n, const std::string& out_dir);

} // namespace qslb
