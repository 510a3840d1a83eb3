#include "qslb/fock.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qslb/coherent.hpp"
#include "qslb/quadrature.hpp"
#include "qslb/specfun.hpp"

namespace qslb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Shared bracket of the fidelity and purity rates,
//   -M + M^2 z 2F1(-(M-1),-(M-1);2;z) / 2F1(-M,-M;1;z).
// The bracket vanishes as z -> inf; past z = 1 it is evaluated in v = 1/z
// with the constant term of the numerator dropped, because that term cancels
// identically and keeping it would leave roundoff that later gets divided by
// (1 - eta).
double rate_bracket(int M, double z) {
    if (M == 0) return 0.0;
    if (z <= 1.0) {
        const double f0 = gauss_2f1_terminating(M, 0, 1, z);
        const double f1 = gauss_2f1_terminating(M, 1, 2, z);
        return -M + static_cast<double>(M) * M * z * f1 / f0;
    }
    const double v = 1.0 / z; // +inf maps to 0
    const Gauss2F1Coeffs a = gauss_2f1_coeffs(M, 0, 1);
    const Gauss2F1Coeffs b = gauss_2f1_coeffs(M, 1, 2);
    double denom = 0.0, numer = 0.0;
    for (int k = M; k >= 1; --k) {
        const double bk = k <= M - 1 ? b.descending[k] : 0.0;
        denom = denom * v + a.descending[k];
        numer = numer * v + (-M * a.descending[k] + static_cast<double>(M) * M * bk);
    }
    denom = denom * v + a.descending[0]; // leading coefficient 1
    numer = numer * v;                   // constant term is exactly zero
    return numer / denom;
}

double one_minus_eta(const PhysParams& p, const DampingClock& c) {
    return -std::expm1(-p.gamma * c.t);
}

double horner(const double* c, int n, double x) {
    double r = c[n - 1];
    for (int k = n - 2; k >= 0; --k) r = r * x + c[k];
    return r;
}

// Quartic under the square root of the one-photon HS distance, in powers of
// nbar_T with reservoir-dependent coefficients.
void g1_poly(double n, double out[5]) {
    out[0] = 1.0 + n * (4.0 + 7.0 * n);
    out[1] = 3.0 * (1.0 + n * (3.0 + 8.0 * n));
    out[2] = 3.0 + n * (1.0 + 27.0 * n);
    out[3] = 1.0 + n * (-6.0 + 12.0 * n);
    out[4] = 4.0 * n * n;
}

// Quintic of the one-photon HS distance rate, same variables.
void g1_rate_poly(double n, double out[6]) {
    out[0] = 2.0 * (1.0 + n * (4.0 + 7.0 * n));
    out[1] = 3.0 * (2.0 + n * (5.0 + 17.0 * n));
    out[2] = 4.0 * (1.0 + n * (-7.0 + 13.0 * n));
    out[3] = -(4.0 + n * (81.0 + 3.0 * n));
    out[4] = -2.0 * (3.0 + n * (20.0 + 6.0 * n));
    out[5] = 2.0 * (-1.0 + n * (6.0 + 6.0 * n));
}

// Antiderivative of sqrt(x^2 - x + 1/3), used by the two-photon averaged
// dissipation speed.
double speed_antideriv(double x) {
    const double root = std::sqrt(x * x - x + 1.0 / 3.0);
    return 0.5 * (x - 0.5) * root + std::log((x - 0.5) + root) / 24.0;
}

} // namespace

FockEvalContext context(const PhysParams& p, const DampingClock& c) {
    FockEvalContext ctx;
    const double ome = one_minus_eta(p, c);
    const double du = p.nbar_R * (1.0 + p.nbar_R) * ome * ome;
    if (du > 0.0) ctx.u = c.eta / du;
    const double dw = (1.0 + 2.0 * p.nbar_R) * ome;
    if (dw > 0.0) {
        const double r = c.eta / dw;
        ctx.w = r * r;
    }
    return ctx;
}

double fidelity_fock(const FockScenario& s, const DampingClock& c) {
    if (s.M < 0) throw std::invalid_argument("fidelity_fock: negative photon number");
    const int M = s.M;
    const double ome = one_minus_eta(s.params, c);
    const double q = s.params.nbar_R * (1.0 + s.params.nbar_R) * ome * ome;
    double sum = 0.0;
    for (int j = 0; j <= M; ++j) {
        const double bj = binomial(M, j);
        sum += bj * bj * std::pow(c.eta, M - j) * std::pow(q, j);
    }
    return sum / std::pow(1.0 + c.nbar_T, 2 * M + 1);
}

double fidelity_fock_rate(const FockScenario& s, const DampingClock& c) {
    if (s.M < 0) throw std::invalid_argument("fidelity_fock_rate: negative photon number");
    const int M = s.M;
    const double g = s.params.gamma, nR = s.params.nbar_R;
    if (c.t == 0.0) return -g * (M + (2 * M + 1) * nR);
    const double ome = one_minus_eta(s.params, c);
    double brace = M + (2 * M + 1) * nR * c.eta / (1.0 + c.nbar_T);
    brace += rate_bracket(M, context(s.params, c).u) * (1.0 + c.eta) / ome;
    return -g * fidelity_fock(s, c) * brace;
}

double fidelity_one_photon_rate(const PhysParams& p, const DampingClock& c) {
    const double nR = p.nbar_R;
    const double ome = one_minus_eta(p, c);
    const double tri = (1.0 + 3.0 * nR) - 2.0 * nR * (2.0 + nR) * ome +
                       nR * nR * (1.0 + nR) * ome * ome;
    return -p.gamma * c.eta * tri / std::pow(1.0 + c.nbar_T, 4);
}

double purity_fock(const FockScenario& s, const DampingClock& c) {
    if (s.M < 0) throw std::invalid_argument("purity_fock: negative photon number");
    const int M = s.M;
    const double ome = one_minus_eta(s.params, c);
    const double e2 = c.eta * c.eta;
    const double q = (1.0 + 2.0 * s.params.nbar_R) * ome;
    const double q2 = q * q;
    double sum = 0.0;
    for (int j = 0; j <= M; ++j) {
        const double bj = binomial(M, j);
        sum += bj * bj * std::pow(e2, M - j) * std::pow(q2, j);
    }
    return sum / std::pow(1.0 + 2.0 * c.nbar_T, 2 * M + 1);
}

double purity_fock_rate(const FockScenario& s, const DampingClock& c) {
    if (s.M < 0) throw std::invalid_argument("purity_fock_rate: negative photon number");
    const int M = s.M;
    const double g = s.params.gamma, nR = s.params.nbar_R;
    if (c.t == 0.0) return -2.0 * g * (M + (2 * M + 1) * nR);
    const double ome = one_minus_eta(s.params, c);
    const double D = 1.0 + 2.0 * c.nbar_T;
    double brace = 2.0 * M + (2 * M + 1) * 2.0 * nR * c.eta / D;
    brace += 2.0 * rate_bracket(M, context(s.params, c).w) / ome;
    return -g * purity_fock(s, c) * brace;
}

double hs_distance_fock(const FockScenario& s, const DampingClock& c) {
    return hs_distance_from_fp(fidelity_fock(s, c), purity_fock(s, c));
}

double decoherence_rate_fock(const PhysParams& p, int M) {
    if (M < 0) throw std::invalid_argument("decoherence_rate_fock: negative photon number");
    return p.gamma * (M + (2 * M + 1) * p.nbar_R);
}

double mixing_rate_fock(const PhysParams& p, int M) {
    return 2.0 * decoherence_rate_fock(p, M);
}

double hs_slope_fock(const PhysParams& p, int M) {
    if (M < 0) throw std::invalid_argument("hs_slope_fock: negative photon number");
    const double nR = p.nbar_R;
    const double d = M - nR;
    return std::sqrt(2.0) * p.gamma *
           std::sqrt(d * d + 3.0 * M * (M + 1.0) * nR * (1.0 + nR));
}

DissipationSpeeds dissipation_speeds(const PhysParams& p, int M, const DampingClock& c) {
    if (p.nbar_R != 0.0)
        throw std::invalid_argument("dissipation_speeds: reservoir must be at zero temperature");
    if (M != 1 && M != 2)
        throw std::invalid_argument("dissipation_speeds: closed forms cover M = 1, 2 only");
    DissipationSpeeds d;
    const double g = p.gamma, gt = g * c.t, eta = c.eta;
    if (M == 1) {
        d.v_tilde = std::sqrt(2.0) * g * eta;
        d.vbar_tilde = c.t == 0.0 ? std::sqrt(2.0) * g
                                  : std::sqrt(2.0) * (-std::expm1(-gt)) / c.t;
        return d;
    }
    d.v_tilde = 2.0 * std::sqrt(6.0) * g * eta * std::sqrt(eta * eta - eta + 1.0 / 3.0);
    if (gt < 1e-4) { // short-time expansion; the antiderivative difference cancels here
        d.vbar_tilde =
            2.0 * std::sqrt(2.0) * g * (1.0 - 1.25 * gt + 25.0 / 24.0 * gt * gt);
    } else {
        d.vbar_tilde =
            2.0 * std::sqrt(6.0) * (speed_antideriv(1.0) - speed_antideriv(eta)) / c.t;
    }
    return d;
}

EvolutionSample qslt_dissipation(const PhysParams& p, int M, const DampingClock& c) {
    const DissipationSpeeds ds = dissipation_speeds(p, M, c);
    const FockScenario s{p, M};
    EvolutionSample r;
    r.t = c.t;
    r.fidelity_F = fidelity_fock(s, c);
    r.purity_P = purity_fock(s, c);
    r.hs_dist_G = hs_distance_fock(s, c);
    r.v_tilde = ds.v_tilde;
    r.vbar_tilde = ds.vbar_tilde;
    const double vF0 = static_qsl_fock(p, M);
    if (c.t == 0.0) {
        r.vbar_F = vF0;
    } else {
        auto root_purity = [&](double tp) {
            return std::sqrt(purity_fock(s, clock(p, tp)));
        };
        r.vbar_F = vF0 * gauss_legendre_64().integrate(root_purity, 0.0, c.t) / c.t;
    }
    const QsltFragment q =
        qslt_bundle(c.t, r.fidelity_F, r.hs_dist_G, r.vbar_F, r.vbar_tilde, vF0);
    r.tau_F = q.tau_F;
    r.tau_F_min = q.tau_F_min;
    r.tau_tilde_F = q.tau_tilde_F;
    r.tau_tilde_G = q.tau_tilde_G;
    return r;
}

OnePhotonDiagnostics one_photon_diagnostics(const PhysParams& p) {
    const double n = p.nbar_R;
    OnePhotonDiagnostics d{};
    g1_poly(n, d.p_coeffs);
    g1_rate_poly(n, d.q_coeffs);

    // Real root of 3x^3 - 3x^2 - 6x - 2, bracketed between 2 and 2.2.
    auto cubic = [](double x) { return ((3.0 * x - 3.0) * x - 6.0) * x - 2.0; };
    double lo = 2.0, hi = 2.2;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (cubic(mid) < 0.0 ? lo : hi) = mid;
    }
    d.nR_prime = 0.5 * (lo + hi);

    if (n == 0.0) {
        d.eta1 = 0.5;
        d.eta2 = kNaN;
        d.eta2_absent = true;
        d.mixing_regime = MixingRegime::min_only;
    } else {
        const double disc = 1.0 + 2.0 * n * (1.0 - n);
        if (disc < 0.0) {
            d.eta1 = kNaN;
            d.eta2 = kNaN;
            d.eta2_absent = true;
            d.complex_roots = true;
            d.mixing_regime = MixingRegime::monotone_decreasing;
        } else {
            const double pref = 1.0 + 2.0 * n;
            const double denom = 2.0 * n * (1.0 + 2.0 * n * (1.0 + n));
            const double root = std::sqrt(disc);
            d.eta1 = pref * ((2.0 * n * n - 1.0) + root) / denom;
            d.eta2 = pref * ((2.0 * n * n - 1.0) - root) / denom;
            if (disc == 0.0) {
                // Double root: the rate touches zero without changing sign.
                d.mixing_regime = MixingRegime::monotone_decreasing;
            } else if (d.eta2 > 0.0) {
                d.mixing_regime = MixingRegime::min_then_max;
            } else {
                d.eta2 = kNaN;
                d.eta2_absent = true;
                d.mixing_regime = MixingRegime::min_only;
            }
        }
    }

    if (n <= 1.0)
        d.g1_regime = G1Regime::monotone_increasing;
    else if (n < d.nR_prime)
        d.g1_regime = G1Regime::overshoot_max;
    else
        d.g1_regime = G1Regime::max_then_min_or_monotone;
    return d;
}

double hs_distance_one_photon(const PhysParams& p, const DampingClock& c) {
    double pc[5];
    g1_poly(p.nbar_R, pc);
    const double nT = c.nbar_T;
    const double val = horner(pc, 5, nT);
    const double scale = (1.0 + nT) * (1.0 + 2.0 * nT);
    return std::sqrt(2.0) * one_minus_eta(p, c) * std::sqrt(val) / (scale * std::sqrt(scale));
}

double hs_distance_one_photon_rate(const PhysParams& p, const DampingClock& c) {
    double pc[5], qc[6];
    g1_poly(p.nbar_R, pc);
    g1_rate_poly(p.nbar_R, qc);
    const double nT = c.nbar_T;
    const double pval = horner(pc, 5, nT);
    const double qval = horner(qc, 6, nT);
    const double scale = (1.0 + nT) * (1.0 + 2.0 * nT);
    return p.gamma * c.eta * qval /
           (std::sqrt(2.0 * pval) * scale * scale * std::sqrt(scale));
}

} // namespace qslb
