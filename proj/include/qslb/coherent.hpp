#pragma once

// Closed forms for the thermalization of a coherent state: exact and smoothed
// fidelities, purity, instantaneous and time-averaged speed bounds, the
// assembled speed-limit times, and the exact vacuum-thermalization bundle.

#include <complex>

#include "qslb/phase_space.hpp"
#include "qslb/qsl.hpp"

namespace qslb {

struct CoherentScenario {
    PhysParams params;
    std::complex<double> alpha;
};

// Exact fidelity Tr[rho(0) rho(t)], oscillating through the cos(omega t)
// cross term of the displacement mismatch.
double fidelity_exact(const CoherentScenario& s, const DampingClock& c);

// Smoothed fidelities obtained by freezing cos(omega t) at an extremum or
// zero, averaging the envelopes, or averaging over one period:
//   plus/minus  : cos -> +1 / -1 (upper/lower envelope)
//   zero        : cos -> 0
//   arithmetic  : (plus + minus)/2
//   period_avg  : (1/2pi) Int over one period (Bessel I0 form)
enum class SmoothedFidelity { plus, minus, zero, arithmetic, period_avg };
double fidelity_smoothed(SmoothedFidelity variant, const CoherentScenario& s,
                         const DampingClock& c);

// Purity 1/(1 + 2 nbar_T); independent of alpha.
double purity_coherent(const DampingClock& c);

// Instantaneous metric speed bound tilde-v(t).
//   exact     : full two-term expression
//   high_freq : displacement term only (exact at nbar_R = 0)
//   low_freq  : thermal term only (exact at alpha = 0)
enum class SpeedBoundMode { exact, high_freq, low_freq };
double speed_bound(const CoherentScenario& s, const DampingClock& c, SpeedBoundMode mode);

// Time-averaged fidelity-based bound v_F(0) * avg sqrt(purity), in closed
// form; t = 0 returns v_F(0).
double avg_speed_vF(const CoherentScenario& s, const DampingClock& c);

// Time-averaged metric bounds in closed form.  dissipative_exact requires
// nbar_R = 0 (where the average of the exact bound is elementary).
enum class AvgSpeedMode { high_freq, low_freq, dissipative_exact };
double avg_speed_vtilde(const CoherentScenario& s, const DampingClock& c, AvgSpeedMode mode);

// Full trace row built from the strictly decreasing smoothed fidelity (the
// "plus" envelope) and its matching metric G = sqrt(1 + P - 2 F_plus).
EvolutionSample qslt_coherent(const CoherentScenario& s, const DampingClock& c);

// Exact closed forms for thermalization of the vacuum (alpha = 0).
struct VacuumBundle {
    double F0 = 1.0;
    double P0 = 1.0;
    double G0 = 0.0;
    double vF00 = 0.0;     // static bound gamma sqrt(1 + 2 nR (1 + nR))
    double vtilbar0 = 0.0; // averaged metric bound (exact here)
    double tauF0 = 0.0;    // (1 - F0)/vF00
    double ttauF0 = 0.0;   // (1 - F0)/vtilbar0
    double ttauG0 = 0.0;   // G0/vtilbar0 = t (1 + sqrt(1+2nT)) / (2 sqrt(1+nT))
};
VacuumBundle vacuum_bundle(const PhysParams& p, const DampingClock& c);

} // namespace qslb
