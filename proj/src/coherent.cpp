#include "qslb/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "qslb/quadrature.hpp"
#include "qslb/specfun.hpp"

namespace qslb {

namespace {

// Shared pieces of the displaced-thermal overlap formulas.
struct OverlapVars {
    double a2;    // |alpha|^2
    double rootEta;
    double onePlusNT;
    double z;     // 2 |alpha|^2 sqrt(eta) / (1 + nbar_T)
};

OverlapVars overlap_vars(const CoherentScenario& s, const DampingClock& c) {
    OverlapVars v;
    v.a2 = std::norm(s.alpha);
    v.rootEta = std::sqrt(c.eta);
    v.onePlusNT = 1.0 + c.nbar_T;
    v.z = 2.0 * v.a2 * v.rootEta / v.onePlusNT;
    return v;
}

double envelope(const OverlapVars& v, double sign) {
    const double mismatch = (1.0 - sign * v.rootEta) * (1.0 - sign * v.rootEta);
    return std::exp(-v.a2 * mismatch / v.onePlusNT) / v.onePlusNT;
}

} // namespace

double fidelity_exact(const CoherentScenario& s, const DampingClock& c) {
    const OverlapVars v = overlap_vars(s, c);
    const double mismatch =
        1.0 + c.eta - 2.0 * v.rootEta * std::cos(s.params.omega * c.t);
    return std::exp(-v.a2 * mismatch / v.onePlusNT) / v.onePlusNT;
}

double fidelity_smoothed(SmoothedFidelity variant, const CoherentScenario& s,
                         const DampingClock& c) {
    const OverlapVars v = overlap_vars(s, c);
    switch (variant) {
        case SmoothedFidelity::plus:
            return envelope(v, +1.0);
        case SmoothedFidelity::minus:
            return envelope(v, -1.0);
        case SmoothedFidelity::zero:
            return std::exp(-v.a2 * (1.0 + c.eta) / v.onePlusNT) / v.onePlusNT;
        case SmoothedFidelity::arithmetic:
            return 0.5 * (envelope(v, +1.0) + envelope(v, -1.0));
        case SmoothedFidelity::period_avg:
            // F_zero I0(z) rewritten against the upper envelope so the
            // exponentially large I0 never appears on its own.
            return envelope(v, +1.0) * bessel_i0_scaled(v.z);
    }
    throw std::invalid_argument("fidelity_smoothed: unknown variant");
}

double purity_coherent(const DampingClock& c) {
    return 1.0 / (1.0 + 2.0 * c.nbar_T);
}

double speed_bound(const CoherentScenario& s, const DampingClock& c, SpeedBoundMode mode) {
    const double g = s.params.gamma, w = s.params.omega, nR = s.params.nbar_R;
    const double a2 = std::norm(s.alpha);
    const double D = 1.0 + 2.0 * c.nbar_T;
    const double disp = 2.0 * (w * w + 0.25 * g * g) * a2 * c.eta / (D * D);
    const double therm = 2.0 * (g * nR) * (g * nR) * c.eta * c.eta / (D * D * D);
    switch (mode) {
        case SpeedBoundMode::exact: return std::sqrt(disp + therm);
        case SpeedBoundMode::high_freq: return std::sqrt(disp);
        case SpeedBoundMode::low_freq: return std::sqrt(therm);
    }
    throw std::invalid_argument("speed_bound: unknown mode");
}

double avg_speed_vF(const CoherentScenario& s, const DampingClock& c) {
    const double vF0 = static_qsl_coherent(s.params, std::abs(s.alpha));
    const double gt = s.params.gamma * c.t;
    const double nR = s.params.nbar_R;
    if (gt < 1e-6) // short-time expansion of the averaged root purity
        return vF0 * (1.0 - 0.5 * nR * gt + nR * (1.0 + 3.0 * nR) * gt * gt / 6.0);
    const double cc = 1.0 + 2.0 * nR;
    const double rootC = std::sqrt(cc);
    const double S = std::sqrt(cc - (cc - 1.0) * c.eta);
    const double Sm1 = (cc - 1.0) * (-std::expm1(-gt)) / (S + 1.0);
    return (vF0 / rootC) * (1.0 + (2.0 / gt) * std::log1p(Sm1 / (1.0 + rootC)));
}

double avg_speed_vtilde(const CoherentScenario& s, const DampingClock& c, AvgSpeedMode mode) {
    const double g = s.params.gamma, w = s.params.omega, nR = s.params.nbar_R;
    const double gt = g * c.t;
    const double aAbs = std::abs(s.alpha);
    const double pref = std::sqrt(2.0 * (w * w + 0.25 * g * g)) * aAbs;
    switch (mode) {
        case AvgSpeedMode::high_freq: {
            if (gt < 1e-6)
                return pref * (1.0 - 0.25 * (1.0 + 4.0 * nR) * gt +
                               (1.0 + 16.0 * nR + 32.0 * nR * nR) * gt * gt / 24.0);
            if (nR < 1e-12) // zero-temperature limit of the artanh form
                return pref * (2.0 / gt) * (-std::expm1(-0.5 * gt));
            const double cc = 1.0 + 2.0 * nR;
            const double p = std::sqrt((cc - 1.0) / cc);
            const double oneMinusY = -std::expm1(-0.5 * gt);
            const double arg = p * oneMinusY / (1.0 / cc + p * p * oneMinusY);
            return pref * (2.0 / (gt * std::sqrt(cc * (cc - 1.0)))) * std::atanh(arg);
        }
        case AvgSpeedMode::low_freq: {
            if (gt < 1e-6)
                return std::sqrt(2.0) * nR * g *
                       (1.0 - 0.5 * (1.0 + 3.0 * nR) * gt +
                        (1.0 + 9.0 * nR + 15.0 * nR * nR) * gt * gt / 6.0);
            const double cc = 1.0 + 2.0 * nR;
            const double S = std::sqrt(cc - (cc - 1.0) * c.eta);
            const double Sm1 = (cc - 1.0) * (-std::expm1(-gt)) / (S + 1.0);
            return std::sqrt(2.0) / c.t * Sm1 / S;
        }
        case AvgSpeedMode::dissipative_exact: {
            if (nR != 0.0)
                throw std::invalid_argument(
                    "avg_speed_vtilde: dissipative_exact needs a zero-temperature reservoir");
            if (c.t == 0.0) return pref;
            return pref * (2.0 / gt) * (-std::expm1(-0.5 * gt));
        }
    }
    throw std::invalid_argument("avg_speed_vtilde: unknown mode");
}

EvolutionSample qslt_coherent(const CoherentScenario& s, const DampingClock& c) {
    EvolutionSample r;
    r.t = c.t;
    r.fidelity_F = fidelity_smoothed(SmoothedFidelity::plus, s, c);
    r.purity_P = purity_coherent(c);
    r.hs_dist_G = hs_distance_from_fp(r.fidelity_F, r.purity_P);
    r.v_tilde = speed_bound(s, c, SpeedBoundMode::exact);
    r.vbar_F = avg_speed_vF(s, c);
    if (s.params.nbar_R == 0.0) {
        r.vbar_tilde = avg_speed_vtilde(s, c, AvgSpeedMode::dissipative_exact);
    } else if (std::norm(s.alpha) == 0.0) {
        r.vbar_tilde = avg_speed_vtilde(s, c, AvgSpeedMode::low_freq);
    } else if (c.t == 0.0) {
        r.vbar_tilde = r.v_tilde;
    } else {
        // Both contributions present: average the exact bound numerically.
        // The integrand is smooth in t, so fixed-order quadrature is exact
        // to machine precision.
        auto vt = [&](double tp) {
            return speed_bound(s, clock(s.params, tp), SpeedBoundMode::exact);
        };
        r.vbar_tilde = gauss_legendre_64().integrate(vt, 0.0, c.t) / c.t;
    }
    const double vF0 = static_qsl_coherent(s.params, std::abs(s.alpha));
    const QsltFragment q =
        qslt_bundle(c.t, r.fidelity_F, r.hs_dist_G, r.vbar_F, r.vbar_tilde, vF0);
    r.tau_F = q.tau_F;
    r.tau_F_min = q.tau_F_min;
    r.tau_tilde_F = q.tau_tilde_F;
    r.tau_tilde_G = q.tau_tilde_G;
    return r;
}

VacuumBundle vacuum_bundle(const PhysParams& p, const DampingClock& c) {
    VacuumBundle b;
    const double nT = c.nbar_T, nR = p.nbar_R;
    const double onePlusNT = 1.0 + nT;
    const double S = std::sqrt(1.0 + 2.0 * nT);
    b.F0 = 1.0 / onePlusNT;
    b.P0 = 1.0 / (S * S);
    b.G0 = std::sqrt(2.0) * nT / (S * std::sqrt(onePlusNT));
    b.vF00 = p.gamma * std::sqrt(1.0 + 2.0 * nR * (1.0 + nR));
    const CoherentScenario vac{p, 0.0};
    b.vtilbar0 = avg_speed_vtilde(vac, c, AvgSpeedMode::low_freq);
    b.tauF0 = nT / (onePlusNT * b.vF00);
    // Algebraic forms of (1 - F0)/vtilbar0 and G0/vtilbar0; both stay finite
    // as nbar_R -> 0 where the ratio itself degenerates to 0/0.
    b.ttauF0 = c.t * S * (S + 1.0) / (2.0 * std::sqrt(2.0) * onePlusNT);
    b.ttauG0 = c.t * (S + 1.0) / (2.0 * std::sqrt(onePlusNT));
    return b;
}

} // namespace qslb
