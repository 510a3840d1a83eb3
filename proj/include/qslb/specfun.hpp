#pragma once

// Scalar special functions used by the closed-form expressions: terminating
// hypergeometric sums, Laguerre polynomials, the scaled Bessel function I0,
// and the Laplace transform of a product of two Laguerre polynomials.

#include <cstdint>
#include <vector>

namespace qslb {

// Rising factorial (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1.
double pochhammer(double a, int m);

// Binomial coefficient as a double via the multiplicative formula; exact for
// the small arguments the closed forms use, a few ulp otherwise.
double binomial(int n, int k);

// Laguerre polynomial L_M(x) = 1F1(-M; 1; x), evaluated by the terminating
// series with compensated summation.
double laguerre(int M, double x);

// d/dx L_M(x); small-x series switch avoids the 0/0 in the recurrence identity.
double laguerre_deriv(int M, double x);

// Terminating Gauss sum 2F1(-K, -K; c; z) with K = M - a_shift >= 0 and
// integer c >= 1.  a_shift in {0, 1} covers both the value and the
// derivative-shifted series that the fidelity/purity rates need.
double gauss_2f1_terminating(int M, int a_shift, int c, double z);

// Coefficient sequence of the same polynomial: ascending[m] multiplies z^m.
// descending[j] multiplies z^{K-j}, so it is ascending reversed; kept explicit
// because the descending form is what keeps z -> infinity limits finite.
struct Gauss2F1Coeffs {
    std::vector<double> ascending;
    std::vector<double> descending;
    int degree = 0;
};
Gauss2F1Coeffs gauss_2f1_coeffs(int M, int a_shift, int c);

// e^{-x} I0(x) for x >= 0: power series below the crossover, scaled asymptotic
// expansion above it.  Never overflows.
double bessel_i0_scaled(double x);

// Unscaled I0(x); +inf once e^x overflows (x > ~709).
double bessel_i0(double x);

// Arguments of the Laplace transform integral
//   L_M(s, sigma, sigma') = Int_0^inf e^{-s t} L_M(sigma t) L_M(sigma' t) dt.
// Domain: s >= sigma > 0 and s >= sigma_prime > 0.
struct LaguerreIntegralArgs {
    double s = 1.0;
    double sigma = 1.0;
    double sigma_prime = 1.0;
};

// Closed form of the integral above, evaluated as the homogeneous sum
//   sum_m C(M,m)^2 (sigma sigma')^m [(s-sigma)(s-sigma')]^{M-m} / s^{2M+1},
// which is exact at s = sigma + sigma' where it collapses to the single
// monomial C(2M,M) (sigma sigma')^M / s^{2M+1}.
double laguerre_product_laplace(const LaguerreIntegralArgs& args, int M);

// Same integral through the alternative hypergeometric representation
// (Pfaff-transformed series); agrees with laguerre_product_laplace to
// machine-level accuracy and is kept as an internal consistency check.
double laguerre_product_laplace_alt(const LaguerreIntegralArgs& args, int M);

// Partial sum sum_{m < terms} L_m(x) L_m(y) z^m of the bilinear Laguerre
// generating function; requires |z| < 1.
double hille_hardy_partial_sum(double x, double y, double z, int terms);

} // namespace qslb
