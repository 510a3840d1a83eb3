#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qslb/quadrature.hpp"
#include "qslb/specfun.hpp"

using namespace qslb;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(3.5, 0) == 1.0);
    CHECK(pochhammer(3.5, 4) == doctest::Approx(563.0625).epsilon(1e-15));
    CHECK(pochhammer(-2.0, 4) == 0.0);
    CHECK(pochhammer(1.0, 5) == 120.0);
}

TEST_CASE("binomial small values exact") {
    CHECK(binomial(10, 3) == 120.0);
    CHECK(binomial(12, 6) == 924.0);
    CHECK(binomial(30, 15) == 155117520.0);
    CHECK(binomial(5, 0) == 1.0);
    CHECK(binomial(5, 5) == 1.0);
    CHECK(binomial(5, 6) == 0.0);
    CHECK(binomial(5, -1) == 0.0);
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("laguerre low orders against explicit polynomials") {
    const double x = 0.7;
    CHECK(laguerre(0, x) == 1.0);
    CHECK(laguerre(1, x) == doctest::Approx(1.0 - x).epsilon(1e-15));
    CHECK(laguerre(2, x) == doctest::Approx(1.0 - 2.0 * x + 0.5 * x * x).epsilon(1e-15));
    CHECK(laguerre(3, x) ==
          doctest::Approx(1.0 - 3.0 * x + 1.5 * x * x - x * x * x / 6.0).epsilon(1e-15));
    CHECK_THROWS_AS(laguerre(-1, x), std::invalid_argument);
}

TEST_CASE("laguerre series matches three-term recurrence") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> ux(0.0, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = ux(rng);
        const int M = 1 + static_cast<int>(rng() % 20);
        double lm1 = 1.0, lm = 1.0 - x;
        for (int k = 1; k < M; ++k) {
            const double next = ((2.0 * k + 1.0 - x) * lm - k * lm1) / (k + 1.0);
            lm1 = lm;
            lm = next;
        }
        // the alternating series cancels down from its largest term, so the
        // attainable absolute accuracy scales with that term, not the value
        double maxTerm = 1.0, term = 1.0;
        for (int k = 0; k < M; ++k) {
            term *= (M - k) * x / ((k + 1.0) * (k + 1.0));
            maxTerm = std::max(maxTerm, std::abs(term));
        }
        CHECK(std::abs(laguerre(M, x) - lm) <= 1e-13 * maxTerm + 1e-13);
    }
}

TEST_CASE("laguerre derivative identities") {
    const int M = 6;
    const double x = 3.1;
    // x L_M'(x) = M (L_M(x) - L_{M-1}(x))
    const double lhs = x * laguerre_deriv(M, x);
    const double rhs = M * (laguerre(M, x) - laguerre(M - 1, x));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

    // central finite difference
    const double h = 1e-6;
    const double fd = (laguerre(M, x + h) - laguerre(M, x - h)) / (2.0 * h);
    CHECK(laguerre_deriv(M, x) == doctest::Approx(fd).epsilon(1e-8));

    // small-x series branch agrees with the recurrence branch near the switch;
    // the recurrence side divides a cancellation by x, so expect ~1e-8 there
    CHECK(laguerre_deriv(M, 0.9e-8) ==
          doctest::Approx(laguerre_deriv(M, 1.1e-8)).epsilon(1e-6));
    CHECK(laguerre_deriv(M, 0.0) == doctest::Approx(-M).epsilon(1e-15));
    CHECK(laguerre_deriv(0, 1.3) == 0.0);
}

TEST_CASE("terminating Gauss sum against hand-expanded polynomials") {
    // 2F1(-3,-3;1;z) = 1 + 9z + 9z^2 + z^3
    const double z = 0.4;
    CHECK(gauss_2f1_terminating(3, 0, 1, z) ==
          doctest::Approx(1.0 + 9.0 * z + 9.0 * z * z + z * z * z).epsilon(1e-15));
    CHECK(gauss_2f1_terminating(3, 0, 1, 0.4) == doctest::Approx(6.104).epsilon(1e-15));

    // 2F1(-2,-2;2;z) = 1 + 2z + z^2/3
    const double w = 0.9;
    CHECK(gauss_2f1_terminating(2, 0, 2, w) ==
          doctest::Approx(1.0 + 2.0 * w + w * w / 3.0).epsilon(1e-15));

    // a_shift = 1 drops the degree by one: 2F1(-2,-2;2;z) from M = 3
    CHECK(gauss_2f1_terminating(3, 1, 2, w) ==
          doctest::Approx(1.0 + 2.0 * w + w * w / 3.0).epsilon(1e-15));

    // degree 0 sums are exactly 1
    CHECK(gauss_2f1_terminating(0, 0, 1, 5.0) == 1.0);
    CHECK(gauss_2f1_terminating(1, 1, 3, 5.0) == 1.0);
}

TEST_CASE("Gauss sum coefficient form consistent with the direct sum") {
    for (const auto& [M, shift, c] : {std::tuple{5, 0, 1}, {5, 1, 2}, {3, 0, 2}}) {
        const Gauss2F1Coeffs co = gauss_2f1_coeffs(M, shift, c);
        const int K = M - shift;
        CHECK(co.degree == K);
        CHECK(static_cast<int>(co.ascending.size()) == K + 1);
        CHECK(static_cast<int>(co.descending.size()) == K + 1);
        for (int j = 0; j <= K; ++j) CHECK(co.descending[j] == co.ascending[K - j]);
        const double z = 2.5;
        double sum = 0.0, zk = 1.0;
        for (int m = 0; m <= K; ++m, zk *= z) sum += co.ascending[m] * zk;
        CHECK(sum == doctest::Approx(gauss_2f1_terminating(M, shift, c, z)).epsilon(1e-14));
    }
}

namespace {

double i0_series(double x) {
    // 40-term power series of I0, plenty for x <= 20
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= (x * x) / (4.0 * k * k);
        sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("scaled Bessel I0") {
    for (double x : {0.0, 0.5, 3.0, 10.0, 17.5}) {
        CHECK(bessel_i0_scaled(x) ==
              doctest::Approx(std::exp(-x) * i0_series(x)).epsilon(1e-13));
    }
    // continuity at the series/asymptotic crossover
    CHECK(bessel_i0_scaled(17.999999) ==
          doctest::Approx(bessel_i0_scaled(18.000001)).epsilon(1e-8));
    // large-argument asymptotics: e^{-x} I0(x) ~ (2 pi x)^{-1/2} (1 + 1/(8x) + ...)
    const double x = 1000.0;
    const double asym = (1.0 + 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x)) /
                        std::sqrt(2.0 * M_PI * x);
    CHECK(bessel_i0_scaled(x) == doctest::Approx(asym).epsilon(1e-9));
}

TEST_CASE("unscaled Bessel I0") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(2.0) == doctest::Approx(2.2795853023360673).epsilon(1e-13));
    CHECK(std::isinf(bessel_i0(800.0)));
}

TEST_CASE("Laguerre product Laplace transform against adaptive quadrature") {
    struct Case {
        double s, sigma, sigmaP;
        int M;
    };
    for (const Case& c : {Case{1.0, 0.6, 0.8, 2}, Case{2.0, 0.5, 1.1, 4},
                          Case{1.5, 1.5, 0.2, 3}, Case{1.0, 0.3, 0.3, 0}}) {
        auto f = [&](double t) {
            return std::exp(-c.s * t) * laguerre(c.M, c.sigma * t) *
                   laguerre(c.M, c.sigmaP * t);
        };
        const double upper = (40.0 + 20.0 * c.M) / c.s;
        const double ref = adaptive_simpson(f, 0.0, upper, 1e-12);
        const double val = laguerre_product_laplace({c.s, c.sigma, c.sigmaP}, c.M);
        CHECK(val == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("Laguerre product Laplace transform collapses at s = sigma + sigma'") {
    for (int M : {1, 2, 4, 6}) {
        const double sigma = 0.45, sigmaP = 0.85, s = sigma + sigmaP;
        const double mono = binomial(2 * M, M) * std::pow(sigma * sigmaP, M) /
                            std::pow(s, 2 * M + 1);
        CHECK(laguerre_product_laplace({s, sigma, sigmaP}, M) ==
              doctest::Approx(mono).epsilon(1e-12));
    }
}

TEST_CASE("two Laplace transform representations agree on random triples") {
    std::mt19937 rng(987123);
    std::uniform_real_distribution<double> us(0.1, 2.0);
    std::uniform_real_distribution<double> ug(0.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double sigma = us(rng), sigmaP = us(rng);
        const double s = std::max(sigma, sigmaP) * (1.0 + ug(rng)) + 1e-3;
        const int M = static_cast<int>(rng() % 7);
        const LaguerreIntegralArgs a{s, sigma, sigmaP};
        const double v1 = laguerre_product_laplace(a, M);
        const double v2 = laguerre_product_laplace_alt(a, M);
        CHECK(v1 == doctest::Approx(v2).epsilon(1e-11));
    }
}

TEST_CASE("bilinear Laguerre generating function partial sums") {
    const double x = 0.8, y = 1.3;
    for (double z : {0.35, 0.6}) {
        const double arg = 2.0 * std::sqrt(x * y * z) / (1.0 - z);
        const double rhs = std::exp(-z * (x + y) / (1.0 - z)) * bessel_i0(arg) / (1.0 - z);
        CHECK(hille_hardy_partial_sum(x, y, z, 400) == doctest::Approx(rhs).epsilon(1e-10));
    }
    CHECK_THROWS_AS(hille_hardy_partial_sum(x, y, 1.0, 10), std::domain_error);
    CHECK_THROWS_AS(hille_hardy_partial_sum(x, y, -1.2, 10), std::domain_error);
}
