#pragma once

// Quadrature rules shared by the phase-space functionals, the time averages
// of closed-form speeds, and the test oracles.

#include <functional>
#include <vector>

namespace qslb {

// Gauss-Legendre rule on [-1, 1]; nodes found by Newton iteration on the
// Legendre polynomial.  Construct once, reuse.
struct GaussLegendre {
    explicit GaussLegendre(int n);
    std::vector<double> nodes;   // ascending in (-1, 1)
    std::vector<double> weights;

    // Integrate f over [a, b] with the affine map of this rule.
    double integrate(const std::function<double(double)>& f, double a, double b) const;
};

// Shared rules of the orders used throughout; built on first use.
const GaussLegendre& gauss_legendre_64();
const GaussLegendre& gauss_legendre_256();

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 50);

// Composite Simpson over uniformly spaced samples f_0..f_n (n even, spacing h).
double simpson_uniform(const std::vector<double>& f, double h);

} // namespace qslb
