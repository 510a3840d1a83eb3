#include "qslb/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qslb {

GaussLegendre::GaussLegendre(int n) {
    if (n < 2) throw std::invalid_argument("GaussLegendre: need at least 2 nodes");
    nodes.resize(n);
    weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev estimate, then Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double a,
                                double b) const {
    const double xm = 0.5 * (b + a);
    const double xr = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(xm + xr * nodes[i]);
    return s * xr;
}

const GaussLegendre& gauss_legendre_64() {
    static const GaussLegendre rule(64);
    return rule;
}

const GaussLegendre& gauss_legendre_256() {
    static const GaussLegendre rule(256);
    return rule;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double simpson_uniform(const std::vector<double>& f, double h) {
    const size_t n = f.size();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("simpson_uniform: need an odd number of samples");
    double s = f[0] + f[n - 1];
    for (size_t i = 1; i + 1 < n; ++i) s += f[i] * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

} // namespace qslb
