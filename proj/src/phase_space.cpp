#include "qslb/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qslb/quadrature.hpp"
#include "qslb/specfun.hpp"

namespace qslb {

namespace {

// Integer power by repeated multiplication; keeps the sign exact for
// negative bases, which std::pow would route through exp/log.
double ipow(double b, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= b;
    return r;
}

// Binomial-weighted exponential polynomial shared by the Wigner and P
// expansions: sum_k C(M,k) base^{M-k} z^k / k!.  Written as a sum of
// monomials so a zero crossing of `base` stays harmless.
double binomial_exp_poly(int M, double base, double z) {
    double sum = 0.0;
    double zk = 1.0;      // z^k / k!
    for (int k = 0; k <= M; ++k) {
        sum += binomial(M, k) * ipow(base, M - k) * zk;
        zk *= z / (k + 1);
    }
    return sum;
}

} // namespace

DampingClock clock(const PhysParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("clock: negative time");
    DampingClock c;
    c.t = t;
    c.eta = std::exp(-p.gamma * t);
    c.nbar_T = p.nbar_R * (-std::expm1(-p.gamma * t));
    return c;
}

std::complex<double>
propagate_ncf(const std::function<std::complex<double>(PhaseSpacePoint)>& chi0,
              PhaseSpacePoint p, const DampingClock& c, const PhysParams& params) {
    const std::complex<double> rot(0.0, params.omega * c.t);
    const std::complex<double> shrunk = p.lam * std::sqrt(c.eta) * std::exp(rot);
    return chi0(PhaseSpacePoint{shrunk}) * std::exp(-c.nbar_T * std::norm(p.lam));
}

std::complex<double> fock_cf(int M, PhaseSpacePoint p, const DampingClock& c) {
    if (M < 0) throw std::invalid_argument("fock_cf: negative photon number");
    const double x = std::norm(p.lam);
    return std::exp(-(0.5 + c.nbar_T) * x) * laguerre(M, c.eta * x);
}

double wigner_fock(int M, std::complex<double> beta, const DampingClock& c,
                   const PhysParams&) {
    if (M < 0) throw std::invalid_argument("wigner_fock: negative photon number");
    const double D = 1.0 + 2.0 * c.nbar_T;
    const double b2 = std::norm(beta);
    const double B = (D - 2.0 * c.eta) / D;
    const double z = 4.0 * c.eta * b2 / (D * D);
    return (2.0 / D) * std::exp(-2.0 * b2 / D) * binomial_exp_poly(M, B, z);
}

double pfunc_fock(int M, std::complex<double> beta, const DampingClock& c,
                  const PhysParams&) {
    if (M < 0) throw std::invalid_argument("pfunc_fock: negative photon number");
    if (!(c.nbar_T > 0.0))
        throw std::domain_error("pfunc_fock: P is a distribution when nbar_T = 0");
    const double nT = c.nbar_T;
    const double b2 = std::norm(beta);
    const double A = (nT - c.eta) / nT;
    const double y = c.eta * b2 / (nT * nT);
    return std::exp(-b2 / nT) / (M_PI * nT) * binomial_exp_poly(M, A, y);
}

ClassicalityThresholds thresholds(const PhysParams& p) {
    ClassicalityThresholds th;
    th.t_w = std::log1p(1.0 / (1.0 + 2.0 * p.nbar_R)) / p.gamma;
    th.t_c = p.nbar_R > 0.0 ? std::log1p(1.0 / p.nbar_R) / p.gamma : kInf;
    return th;
}

Regime classify(const ClassicalityThresholds& th, double t) {
    if (t < 0.0) throw std::invalid_argument("classify: negative time");
    if (t < th.t_w) return Regime::strong_nonclassical;
    if (t < th.t_c) return Regime::weak_nonclassical;
    return Regime::classical;
}

PhaseSpaceFunctionals phase_space_functionals(const RadialCF& cf0, const RadialCF& cft,
                                              const RadialCF& dcft_dt) {
    const RadialCF* cfs[3] = {&cf0, &cft, &dcft_dt};

    // Spot-check radial symmetry and realness, so the 2-D integrals really
    // collapse to one dimension.
    for (const RadialCF* cf : cfs) {
        for (double r : {0.7, 2.3}) {
            const std::complex<double> on_axis = (*cf)(r);
            for (double ph : {0.9, 2.4, 4.1}) {
                const std::complex<double> off = (*cf)(std::polar(r, ph));
                if (std::abs(off - on_axis) > 1e-10 * (1.0 + std::abs(on_axis)))
                    throw std::invalid_argument(
                        "phase_space_functionals: input is not radially symmetric");
            }
            if (std::abs(on_axis.imag()) > 1e-10 * (1.0 + std::abs(on_axis)))
                throw std::invalid_argument(
                    "phase_space_functionals: input is not real");
        }
    }

    // With d^2 lambda = pi dx for radial functions of x = |lambda|^2, the
    // prefactor 1/pi cancels and each functional is a plain integral in x.
    auto gF = [&](double x) {
        const double r = std::sqrt(x);
        return cf0(r).real() * cft(r).real();
    };
    auto gP = [&](double x) {
        const double v = cft(std::sqrt(x)).real();
        return v * v;
    };
    auto gV = [&](double x) {
        const double v = dcft_dt(std::sqrt(x)).real();
        return v * v;
    };

    // Pick the cutoff by probing the decay of all three integrands, then
    // verify the tail beyond the cutoff really is negligible.
    double gmax = 1.0;
    double X = 8.0;
    int quiet = 0;
    while (X < 10000.0) {
        const double m = std::max({std::abs(gF(X)), std::abs(gP(X)), std::abs(gV(X))});
        gmax = std::max(gmax, m);
        if (m <= 1e-18 * gmax) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        X *= 1.25;
    }
    if (X >= 10000.0)
        throw std::domain_error("phase_space_functionals: integrand does not decay");

    const GaussLegendre& gl = gauss_legendre_256();
    PhaseSpaceFunctionals out;
    auto integrate = [&](const std::function<double(double)>& g) {
        double cut = X;
        for (int attempt = 0; attempt < 10; ++attempt) {
            const double body = gl.integrate(g, 0.0, cut);
            const double tail = gl.integrate(g, cut, 1.6 * cut);
            if (std::abs(tail) <= 1e-13 * (1.0 + std::abs(body))) return body + tail;
            cut *= 1.6;
        }
        throw std::domain_error("phase_space_functionals: tail does not converge");
    };
    out.F = integrate(gF);
    out.P = integrate(gP);
    out.v_tilde_sq = integrate(gV);
    return out;
}

} // namespace qslb
