#pragma once

// Closed forms for thermalized Fock states: fidelity, purity, their rates,
// the Hilbert-Schmidt distance, the zero-temperature dissipation speeds and
// speed-limit times for one and two photons, and the one-photon extremum
// analysis (purity and distance regimes).

#include "qslb/phase_space.hpp"
#include "qslb/qsl.hpp"

namespace qslb {

struct FockScenario {
    PhysParams params;
    int M = 1;
};

// The positive variables u(t) = eta / [nR(1+nR)(1-eta)^2] and
// w(t) = [eta / ((1+2nR)(1-eta))]^2, both strictly decreasing in t.
// t = 0 flags both as +inf; u is +inf for all t when nR = 0.
struct FockEvalContext {
    double u = kInf;
    double w = kInf;
};
FockEvalContext context(const PhysParams& p, const DampingClock& c);

// Fidelity F_M(t); eta^M at nR = 0, exactly 1 at t = 0.
double fidelity_fock(const FockScenario& s, const DampingClock& c);

// dF_M/dt for t > 0; for M = 1 the factored trinomial form is also available
// and the two agree to machine accuracy.
double fidelity_fock_rate(const FockScenario& s, const DampingClock& c);
double fidelity_one_photon_rate(const PhysParams& p, const DampingClock& c);

// Purity P_M(t) and dP_M/dt.
double purity_fock(const FockScenario& s, const DampingClock& c);
double purity_fock_rate(const FockScenario& s, const DampingClock& c);

// Hilbert-Schmidt distance sqrt(1 + P_M - 2 F_M).
double hs_distance_fock(const FockScenario& s, const DampingClock& c);

// Decoherence and mixing rates gamma [M + (2M+1) nR] and twice that; the
// initial slopes of 1 - F_M and 1 - P_M.
double decoherence_rate_fock(const PhysParams& p, int M);
double mixing_rate_fock(const PhysParams& p, int M);

// Initial slope of the HS distance,
// sqrt(2) gamma sqrt((M - nR)^2 + 3 M (M+1) nR (1+nR)).
double hs_slope_fock(const PhysParams& p, int M);

// Zero-temperature dissipation speeds for M in {1, 2}:
// instantaneous bound and its closed-form time average.
struct DissipationSpeeds {
    double v_tilde = 0.0;
    double vbar_tilde = 0.0;
};
DissipationSpeeds dissipation_speeds(const PhysParams& p, int M, const DampingClock& c);

// Full trace row for zero-temperature dissipation of |1> or |2>; the
// HS-metric bound is saturated (tau_tilde_G = t) at M = 1.
EvolutionSample qslt_dissipation(const PhysParams& p, int M, const DampingClock& c);

// One-photon extremum analysis.  eta1/eta2 are the purity-rate roots in
// decreasing order (quiet NaN when absent or complex; complex_roots set for
// the conjugate pair above nR = (1+sqrt(3))/2).  p/q are the polynomial
// coefficient vectors (in nbar_T) of the closed forms for G1 and dG1/dt,
// and nR_prime is the real root of the asymptotic-slope polynomial.
enum class MixingRegime { min_only, min_then_max, monotone_decreasing };
enum class G1Regime { monotone_increasing, overshoot_max, max_then_min_or_monotone };

struct OnePhotonDiagnostics {
    double eta1;
    double eta2;
    bool eta2_absent = false;
    bool complex_roots = false;
    double p_coeffs[5];
    double q_coeffs[6];
    double nR_prime;
    MixingRegime mixing_regime;
    G1Regime g1_regime;
};
OnePhotonDiagnostics one_photon_diagnostics(const PhysParams& p);

// G1 and dG1/dt through the explicit polynomial closed forms (equal to the
// generic fidelity/purity route; kept separate so tests can cross the two).
double hs_distance_one_photon(const PhysParams& p, const DampingClock& c);
double hs_distance_one_photon_rate(const PhysParams& p, const DampingClock& c);

} // namespace qslb
