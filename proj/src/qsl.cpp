#include "qslb/qsl.hpp"

#include <cmath>
#include <stdexcept>

namespace qslb {

PhysParams PhysParams::free_evolution(double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("free_evolution: omega must be positive");
    PhysParams p;
    p.gamma = 0.0;
    p.omega = omega;
    p.nbar_R = 0.0;
    return p;
}

PhysParams make_params(double gamma, double omega, double nbar_R) {
    if (!(gamma > 0.0)) throw std::invalid_argument("make_params: gamma must be positive");
    if (!(omega > 0.0)) throw std::invalid_argument("make_params: omega must be positive");
    if (nbar_R < 0.0) throw std::invalid_argument("make_params: nbar_R must be non-negative");
    return PhysParams{gamma, omega, nbar_R};
}

InitialMoments coherent_moments(const PhysParams& p, std::complex<double> alpha) {
    const double a2 = std::norm(alpha);
    InitialMoments m;
    m.mean_a = alpha;
    m.mean_n = a2;
    m.mean_a2 = alpha * alpha;
    m.mean_adaa = std::conj(alpha) * (a2 + 1.0); // <a^dag a a^dag> = conj(a)(|a|^2 + 1)
    m.energy_E = p.omega * a2;
    m.std_E = p.omega * std::abs(alpha); // Poisson number statistics
    return m;
}

InitialMoments fock_moments(const PhysParams& p, int M) {
    if (M < 0) throw std::invalid_argument("fock_moments: negative photon number");
    InitialMoments m;
    m.mean_n = M;
    m.energy_E = p.omega * M;
    m.std_E = 0.0;
    return m;
}

double hs_distance_from_fp(double F, double P) {
    if (!(F >= 0.0 && F <= 1.0)) throw std::domain_error("hs_distance_from_fp: F outside [0,1]");
    if (!(P > 0.0 && P <= 1.0)) throw std::domain_error("hs_distance_from_fp: P outside (0,1]");
    const double g2 = 1.0 + P - 2.0 * F;
    if (g2 < -1e-12) throw std::domain_error("hs_distance_from_fp: 1 + P - 2F is negative");
    return std::sqrt(std::max(0.0, g2));
}

double static_qsl_vF0(const PhysParams& p, const InitialMoments& m) {
    if (m.mean_n < 0.0 || m.std_E < 0.0)
        throw std::domain_error("static_qsl_vF0: invalid moments");
    if (std::norm(m.mean_a) > m.mean_n * (1.0 + 1e-12) + 1e-15)
        throw std::domain_error("static_qsl_vF0: |<a>|^2 exceeds <n>");
    const double dE2 = m.std_E * m.std_E;
    if (p.gamma == 0.0) return std::sqrt(2.0) * m.std_E;

    const double g = p.gamma, w = p.omega, nR = p.nbar_R;
    const std::complex<double> cross = m.mean_a * m.mean_adaa;
    const double n = m.mean_n;
    const double thermal = nR * (nR + 1.0);
    double v2 = 2.0 * (1.0 + (nR + 0.5) * (nR + 0.5) * g * g / (w * w)) * dE2;
    v2 += 4.0 * g * w * cross.imag();
    v2 += g * g * (2.0 * (3.0 * thermal + 1.0) * n * (n + 1.0) +
                   2.0 * thermal * (std::norm(m.mean_a2) + 1.0) + 1.0 -
                   2.0 * (2.0 * nR + 1.0) * (2.0 * nR + 1.0) * cross.real());
    if (v2 < -1e-12) throw std::domain_error("static_qsl_vF0: inconsistent moments");
    return std::sqrt(std::max(0.0, v2));
}

double static_qsl_coherent(const PhysParams& p, double alpha_abs) {
    if (alpha_abs < 0.0) throw std::domain_error("static_qsl_coherent: negative modulus");
    const double g = p.gamma, w = p.omega, nR = p.nbar_R;
    return std::sqrt(2.0 * (w * w + 0.25 * g * g) * alpha_abs * alpha_abs +
                     g * g * (2.0 * nR * (nR + 1.0) + 1.0));
}

double static_qsl_fock(const PhysParams& p, int M) {
    if (M < 0) throw std::invalid_argument("static_qsl_fock: negative photon number");
    const double nR = p.nbar_R;
    const double thermal = nR * (nR + 1.0);
    return p.gamma * std::sqrt(2.0 * (3.0 * thermal + 1.0) * M * (M + 1.0) +
                               2.0 * thermal + 1.0);
}

OrthogonalizationBounds orthogonalization_bounds(double E, double dE) {
    if (E < 0.0 || dE < 0.0)
        throw std::domain_error("orthogonalization_bounds: E and dE must be non-negative");
    OrthogonalizationBounds b;
    b.tau_MT = dE > 0.0 ? M_PI / (2.0 * dE) : kInf;
    b.tau_ML = E > 0.0 ? M_PI / (2.0 * E) : kInf;
    const double denom = E + dE - std::abs(E - dE); // = 2 min(E, dE)
    b.tau_unified = denom > 0.0 ? M_PI / denom : kInf;
    return b;
}

QsltFragment qslt_bundle(double t, double F, double G, double vbar_F,
                         double vbar_tilde, double vF0) {
    QsltFragment q;
    if (t == 0.0) return q; // all bounds vanish at the initial instant
    const double oneMinusF = 1.0 - F;
    if ((vbar_F <= 0.0 && oneMinusF > 0.0) || (vbar_tilde <= 0.0 && (oneMinusF > 0.0 || G > 0.0)) ||
        (vF0 <= 0.0 && oneMinusF > 0.0))
        throw std::domain_error("qslt_bundle: vanishing speed with nonzero distinguishability");
    q.tau_F = vbar_F > 0.0 ? oneMinusF / vbar_F : 0.0;
    q.tau_F_min = vF0 > 0.0 ? oneMinusF / vF0 : 0.0;
    q.tau_tilde_F = vbar_tilde > 0.0 ? oneMinusF / vbar_tilde : 0.0;
    q.tau_tilde_G = vbar_tilde > 0.0 ? G / vbar_tilde : 0.0;
    if (q.tau_F < q.tau_F_min - kHierarchyTol)
        throw std::logic_error("qslt_bundle: tau_F below tau_F_min");
    if (q.tau_tilde_G < q.tau_tilde_F - kHierarchyTol)
        throw std::logic_error("qslt_bundle: tau_tilde_G below tau_tilde_F");
    return q;
}

} // namespace qslb
