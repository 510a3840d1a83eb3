#pragma once

// State-independent quantum-speed-limit machinery: physical parameters,
// initial-moment records, the static speed limits, orthogonalization bounds,
// and the assembly of speed-limit times from figures of merit.

#include <complex>
#include <limits>

namespace qslb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Hierarchy assertions absorb quadrature noise up to this absolute slack.
inline constexpr double kHierarchyTol = 1e-9;

// Reservoir coupling gamma, mode frequency omega, mean reservoir occupancy
// nbar_R.  hbar = 1 throughout; time is naturally measured in units of
// 1/gamma, omega enters only through the ratio omega/gamma.
struct PhysParams {
    double gamma = 1.0;
    double omega = 10.0;
    double nbar_R = 0.0;

    // Free evolution (gamma = 0) is allowed only through this constructor.
    static PhysParams free_evolution(double omega);
};

// Validates gamma > 0, omega > 0, nbar_R >= 0; throws std::invalid_argument.
PhysParams make_params(double gamma, double omega, double nbar_R);

// First moments of the initial pure state, plus mean energy and its spread.
struct InitialMoments {
    std::complex<double> mean_a;    // <a>
    double mean_n = 0.0;            // <a^dag a>
    std::complex<double> mean_a2;   // <a^2>
    std::complex<double> mean_adaa; // <a^dag a a^dag>
    double energy_E = 0.0;          // E = <H>
    double std_E = 0.0;             // Delta E
};

InitialMoments coherent_moments(const PhysParams& p, std::complex<double> alpha);
InitialMoments fock_moments(const PhysParams& p, int M);

// One row of an evolution trace.
struct EvolutionSample {
    double t = 0.0;
    double fidelity_F = 1.0;
    double purity_P = 1.0;
    double hs_dist_G = 0.0;
    double v_tilde = 0.0;    // instantaneous speed bound
    double vbar_F = 0.0;     // time-averaged fidelity-based bound
    double vbar_tilde = 0.0; // time-averaged metric-based bound
    double tau_F = 0.0;
    double tau_F_min = 0.0;
    double tau_tilde_F = 0.0;
    double tau_tilde_G = 0.0;
};

// sqrt(max(0, 1 + P - 2F)); rejects inputs outside the admissible ranges or
// with 1 + P - 2F < -1e-12.
double hs_distance_from_fp(double F, double P);

// Static speed limit ||L^dag rho(0)||_2 from the initial moments.  Reduces to
// sqrt(2) Delta E at gamma = 0.
double static_qsl_vF0(const PhysParams& p, const InitialMoments& m);

// Closed form for a coherent state of modulus alpha_abs:
// sqrt(2 (omega^2 + gamma^2/4) |alpha|^2 + gamma^2 [2 nR(nR+1) + 1]).
double static_qsl_coherent(const PhysParams& p, double alpha_abs);

// Closed form for the Fock state |M>:
// gamma sqrt(2 [3 nR(nR+1) + 1] M(M+1) + 2 nR(nR+1) + 1).
double static_qsl_fock(const PhysParams& p, int M);

// Passage-time bounds from mean energy and energy spread (hbar = 1).
struct OrthogonalizationBounds {
    double tau_MT = kInf;      // pi / (2 Delta E)
    double tau_ML = kInf;      // pi / (2 E)
    double tau_unified = kInf; // pi / (E + dE - |E - dE|) = max of the two
};
OrthogonalizationBounds orthogonalization_bounds(double E, double dE);

// QSLT fields assembled from accumulated figures of merit and averaged
// speeds; asserts tau_F >= tau_F_min and tau_tilde_G >= tau_tilde_F.
struct QsltFragment {
    double tau_F = 0.0;
    double tau_F_min = 0.0;
    double tau_tilde_F = 0.0;
    double tau_tilde_G = 0.0;
};
QsltFragment qslt_bundle(double t, double F, double G, double vbar_F,
                         double vbar_tilde, double vF0);

} // namespace qslb
