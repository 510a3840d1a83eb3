#include "qslb/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qslb {

namespace {

// Kahan-compensated accumulator.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double pochhammer(double a, int m) {
    if (m < 0) throw std::invalid_argument("pochhammer: negative order");
    double r = 1.0;
    for (int k = 0; k < m; ++k) r *= a + k;
    return r;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

double laguerre(int M, double x) {
    if (M < 0) throw std::invalid_argument("laguerre: negative degree");
    Kahan acc;
    double term = 1.0;
    acc.add(term);
    for (int k = 0; k < M; ++k) {
        term *= -(double)(M - k) * x / ((double)(k + 1) * (k + 1));
        acc.add(term);
    }
    return acc.sum;
}

double laguerre_deriv(int M, double x) {
    if (M < 0) throw std::invalid_argument("laguerre_deriv: negative degree");
    if (M == 0) return 0.0;
    if (std::abs(x) < 1e-8) {
        // Leading series terms; enough for full accuracy this close to 0.
        return -M + binomial(M, 2) * x - binomial(M, 3) * x * x / 2.0;
    }
    // x L_M'(x) = M [L_M(x) - L_{M-1}(x)]
    return M * (laguerre(M, x) - laguerre(M - 1, x)) / x;
}

double gauss_2f1_terminating(int M, int a_shift, int c, double z) {
    const int K = M - a_shift;
    if (K < 0) throw std::invalid_argument("gauss_2f1_terminating: series does not terminate");
    if (c < 1) throw std::invalid_argument("gauss_2f1_terminating: lower parameter must be a positive integer");
    Kahan acc;
    double term = 1.0;
    acc.add(term);
    for (int m = 0; m < K; ++m) {
        const double num = (double)(K - m) * (K - m);
        term *= num * z / ((double)(c + m) * (m + 1));
        acc.add(term);
    }
    return acc.sum;
}

Gauss2F1Coeffs gauss_2f1_coeffs(int M, int a_shift, int c) {
    const int K = M - a_shift;
    if (K < 0) throw std::invalid_argument("gauss_2f1_coeffs: series does not terminate");
    if (c < 1) throw std::invalid_argument("gauss_2f1_coeffs: lower parameter must be a positive integer");
    Gauss2F1Coeffs out;
    out.degree = K;
    out.ascending.resize(K + 1);
    double coeff = 1.0;
    out.ascending[0] = coeff;
    for (int m = 0; m < K; ++m) {
        coeff *= (double)(K - m) * (K - m) / ((double)(c + m) * (m + 1));
        out.ascending[m + 1] = coeff;
    }
    out.descending.assign(out.ascending.rbegin(), out.ascending.rend());
    return out;
}

double bessel_i0_scaled(double x) {
    if (x < 0.0) throw std::invalid_argument("bessel_i0_scaled: negative argument");
    if (x < 18.0) {
        // Power series of I0, scaled afterwards; all terms positive.
        Kahan acc;
        double term = 1.0;
        acc.add(term);
        const double q = 0.25 * x * x;
        for (int k = 1; k < 60; ++k) {
            term *= q / ((double)k * k);
            acc.add(term);
            if (term < acc.sum * 1e-18) break;
        }
        return std::exp(-x) * acc.sum;
    }
    // Scaled asymptotic expansion, truncated at its smallest term.
    Kahan acc;
    double term = 1.0;
    acc.add(term);
    double prev = term;
    for (int k = 1; k < 40; ++k) {
        const double r = (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        term *= r;
        if (term >= prev) break; // divergent tail reached
        acc.add(term);
        prev = term;
        if (term < 1e-18) break;
    }
    return acc.sum / std::sqrt(2.0 * M_PI * x);
}

double bessel_i0(double x) {
    const double s = bessel_i0_scaled(x);
    if (x > 700.0) return std::numeric_limits<double>::infinity();
    return std::exp(x) * s;
}

double laguerre_product_laplace(const LaguerreIntegralArgs& args, int M) {
    const double s = args.s, sg = args.sigma, sp = args.sigma_prime;
    if (!(sg > 0.0) || !(sp > 0.0) || s < sg || s < sp)
        throw std::domain_error("laguerre_product_laplace: need s >= sigma > 0 and s >= sigma' > 0");
    if (M < 0) throw std::invalid_argument("laguerre_product_laplace: negative degree");
    // Homogeneous expansion of the hypergeometric closed form; exact at the
    // confluence s = sigma + sigma'.
    const double d = (s - sg) * (s - sp);
    const double pr = sg * sp;
    Kahan acc;
    for (int m = 0; m <= M; ++m) {
        const double cm = binomial(M, m);
        acc.add(cm * cm * std::pow(pr, m) * std::pow(d, M - m));
    }
    return acc.sum / std::pow(s, 2 * M + 1);
}

double laguerre_product_laplace_alt(const LaguerreIntegralArgs& args, int M) {
    const double s = args.s, sg = args.sigma, sp = args.sigma_prime;
    if (!(sg > 0.0) || !(sp > 0.0) || s < sg || s < sp)
        throw std::domain_error("laguerre_product_laplace_alt: need s >= sigma > 0 and s >= sigma' > 0");
    if (M < 0) throw std::invalid_argument("laguerre_product_laplace_alt: negative degree");
    // Pfaff-transformed series, expanded to stay finite at s = sigma + sigma':
    // sum_m C(M,m) C(M+m,m) (sigma sigma')^m (s - sigma - sigma')^{M-m} / s^{M+m+1}.
    const double d = s - sg - sp;
    const double pr = sg * sp;
    Kahan acc;
    for (int m = 0; m <= M; ++m) {
        acc.add(binomial(M, m) * binomial(M + m, m) * std::pow(pr, m) *
                std::pow(d, M - m) / std::pow(s, M + m + 1));
    }
    return acc.sum;
}

double hille_hardy_partial_sum(double x, double y, double z, int terms) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("hille_hardy_partial_sum: |z| must be < 1");
    if (terms < 1) return 0.0;
    Kahan acc;
    double Lx0 = 1.0, Ly0 = 1.0; // L_0
    double Lx1 = 1.0 - x, Ly1 = 1.0 - y;
    double zp = 1.0;
    acc.add(Lx0 * Ly0 * zp);
    for (int m = 1; m < terms; ++m) {
        double Lxm, Lym;
        if (m == 1) {
            Lxm = Lx1;
            Lym = Ly1;
        } else {
            Lxm = ((2.0 * m - 1.0 - x) * Lx1 - (m - 1.0) * Lx0) / m;
            Lym = ((2.0 * m - 1.0 - y) * Ly1 - (m - 1.0) * Ly0) / m;
            Lx0 = Lx1; Lx1 = Lxm;
            Ly0 = Ly1; Ly1 = Lym;
        }
        zp *= z;
        acc.add(Lxm * Lym * zp);
    }
    return acc.sum;
}

} // namespace qslb
