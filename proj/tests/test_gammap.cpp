#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/gammap.hpp"

using namespace padic;

TEST_CASE("gamma parameter domain") {
    PrimeContext ctx(3, 8);
    CHECK_NOTHROW(GammaParameter(ctx, cpp_rational(1)));
    CHECK_NOTHROW(GammaParameter(ctx, cpp_rational(4)));
    CHECK_NOTHROW(GammaParameter(ctx, cpp_rational(-2)));  // 1 - 3
    CHECK_NOTHROW(GammaParameter(ctx, cpp_rational(5, 2)));
    CHECK_THROWS_AS(GammaParameter(ctx, cpp_rational(2)), std::domain_error);
    CHECK_THROWS_AS(GammaParameter(ctx, cpp_rational(1, 3)),
                    std::domain_error);
}

TEST_CASE("symbolic oracle recurrence") {
    SymbolicGamma g1 = gamma_oracle(cpp_rational(1), 1);
    CHECK(g1.A == 0);
    CHECK(g1.B == 1);
    CHECK(gamma_oracle(cpp_rational(1), 2).B == 2);
    CHECK(gamma_oracle(cpp_rational(1), 3).B == 5);
    CHECK(gamma_oracle(cpp_rational(1), 4).A == 0);
    CHECK(gamma_oracle(cpp_rational(1), 4).B == 16);
    // Gamma(n+1, r) = n Gamma(n, r) + r^n e^{-r}
    cpp_rational r(4);
    SymbolicGamma a = gamma_oracle(r, 5), b = gamma_oracle(r, 6);
    CHECK(b.A == 5 * a.A);
    CHECK(b.B == 5 * a.B + r * r * r * r * r);
    CHECK_THROWS_AS(gamma_oracle(r, 0), std::invalid_argument);
}

TEST_CASE("g_r and f_r coefficients") {
    PrimeContext ctx(3, 10);
    GammaParameter r(ctx, cpp_rational(4));
    MahlerSeries g = g_series(ctx, r, 6);
    MahlerSeries f = f_r_series(ctx, r, 6);
    long gexp[] = {1, 3, 9, 27, 81, 243};
    long fexp[] = {1, 4, 17, 78, 393, 2208};
    for (long n = 0; n < 6; ++n) {
        CHECK(congruent(g.coeffs[n], Scalar::from_integer(ctx, gexp[n]), 10));
        CHECK(congruent(f.coeffs[n], Scalar::from_integer(ctx, fexp[n]), 10));
    }
    // f_1 = q
    CHECK(coefficient_residual(
              f_r_series(ctx, GammaParameter(ctx, cpp_rational(1)), 8),
              q_series(ctx, 8)) >= 10);
}

TEST_CASE("f_r satisfies f_r(x) = x f_r(x-1) + r^x at integers") {
    PrimeContext ctx(3, 10);
    GammaParameter r(ctx, cpp_rational(4));
    MahlerSeries f = f_r_series(ctx, r, default_window(ctx));
    for (long x = 1; x <= 5; ++x) {
        cpp_int rx = pow_p(4, x);
        Scalar lhs = eval_at_int(f, x);
        Scalar rhs = Scalar::from_integer(ctx, x) * eval_at_int(f, x - 1) +
                     Scalar::from_integer(ctx, rx);
        CHECK(congruent(lhs, rhs, 8));
    }
}

TEST_CASE("gamma_bar at x = 1 is exp(r p~)") {
    PrimeContext ctx(3, 6);
    GammaParameter r(ctx, cpp_rational(1));
    long N = default_window(ctx);
    Scalar v = gamma_bar_eval(ctx, r, Scalar::from_integer(ctx, 1), N);
    CHECK(congruent(v, Scalar::from_integer(ctx, 229), 6));  // exp(3)
    CHECK(congruent(exp_r_ptilde(ctx, r), v, 6));
}

TEST_CASE("tau_p sends the oracle to the interpolated value") {
    for (long p : {2L, 3L, 5L}) {
        PrimeContext ctx(p, 20);
        long N = default_window(ctx);
        for (cpp_rational rv : {cpp_rational(1), cpp_rational(1 + p)}) {
            GammaParameter r(ctx, rv);
            MahlerSeries fr = f_r_series(ctx, r, N);
            Scalar e = exp_r_ptilde(ctx, r);
            for (long n = 1; n <= 4; ++n) {
                Scalar lhs = e * eval_at_int(fr, n - 1);
                CHECK(congruent(lhs, tau_p_apply(ctx, gamma_oracle(rv, n)),
                                18));
            }
        }
    }
}

TEST_CASE("closed-form route agrees") {
    PrimeContext ctx(5, 12);
    GammaParameter r(ctx, cpp_rational(6));
    long N = default_window(ctx);
    Scalar x = Scalar::from_integer(ctx, 3);
    CHECK(congruent(gamma_bar_closed_eval(ctx, r, x, N),
                    gamma_bar_eval(ctx, r, x, N), 10));
}
