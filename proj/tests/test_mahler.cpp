#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/mahler.hpp"

using namespace padic;

namespace {
Scalar I(const PrimeContext& ctx, long n) {
    return Scalar::from_integer(ctx, n);
}
}  // namespace

TEST_CASE("default window reaches the precision target") {
    CHECK(factorial_valuation(default_window(PrimeContext(2, 30)), 2) >= 35);
    CHECK(factorial_valuation(default_window(PrimeContext(3, 30)), 3) >= 35);
    CHECK(factorial_valuation(default_window(PrimeContext(5, 30)) - 1, 5) < 35);
}

TEST_CASE("beta series evaluate to binomial coefficients") {
    PrimeContext ctx(3, 8);
    MahlerSeries b2 = beta_series(ctx, 2, 6);
    CHECK(congruent(eval(b2, I(ctx, 4)), I(ctx, 6), 8));
    CHECK(eval_at_int(b2, 4).integer_residue() == 6);
    CHECK(eval_at_int(b2, -1).integer_residue() ==
          I(ctx, 1).integer_residue());  // C(-1,2) = 1
    CHECK(congruent(eval(b2, Scalar::from_rational(ctx, cpp_rational(1, 2))),
                    Scalar::from_rational(ctx, cpp_rational(-1, 8)), 8));
    CHECK_THROWS_AS(eval(b2, Scalar::from_rational(ctx, cpp_rational(1, 3))),
                    std::domain_error);
}

TEST_CASE("nabla, shift, and indefinite sum") {
    PrimeContext ctx(5, 8);
    MahlerSeries f = zero_series(ctx, 6);
    // leave the top coefficients exactly zero so the window edge carries no
    // truncation error into the shifted series
    for (long n = 0; n < 4; ++n) f.coeffs[n] = I(ctx, n + 1);

    // (nabla f)(x) = f(x+1) - f(x)
    MahlerSeries nf = nabla(f);
    Scalar x = I(ctx, 3);
    CHECK(congruent(eval(nf, x), eval(f, I(ctx, 4)) - eval(f, x), 8));

    // U f = f(x+1); U^{-1} undoes it coefficientwise in the window
    MahlerSeries uf = shift(f, 1);
    CHECK(uf.window() == 5);
    CHECK(congruent(eval(uf, x), eval(f, I(ctx, 4)), 8));
    CHECK(coefficient_residual(shift(uf, -1), f) >= 8);

    // indefinite sum telescopes: nabla(Sum f) = f, (Sum f)(0) = 0
    MahlerSeries sf = indefinite_sum(f);
    CHECK(eval_at_int(sf, 0).is_exact_zero());
    CHECK(coefficient_residual(nabla(sf), f) >= 8);
    Scalar total = Scalar::zero(ctx);
    for (long k = 0; k < 4; ++k) total += eval_at_int(f, k);
    CHECK(congruent(eval_at_int(sf, 4), total, 8));
}

TEST_CASE("arithmetic and scaling") {
    PrimeContext ctx(3, 8);
    MahlerSeries a = beta_series(ctx, 1, 5);
    MahlerSeries b = constant_series(ctx, cpp_int(2), 5);
    MahlerSeries s = a + b;
    CHECK(congruent(eval_at_int(s, 7), I(ctx, 9), 8));
    CHECK(congruent(eval_at_int(a - b, 7), I(ctx, 5), 8));
    CHECK(congruent(eval_at_int(scale(I(ctx, 3), a), 7), I(ctx, 21), 8));
}

TEST_CASE("tail certificate bounds evaluation precision") {
    PrimeContext ctx(3, 20);
    MahlerSeries f = constant_series(ctx, cpp_int(1), 4);
    f.tail_valuation = 6;
    CHECK(eval(f, I(ctx, 2)).precision() == 6);
}

TEST_CASE("analyticity diagnostic") {
    PrimeContext ctx(3, 10);
    MahlerSeries f = zero_series(ctx, 12);
    for (long n = 0; n < 12; ++n)
        f.coeffs[n] = Scalar::from_integer(ctx, pow_p(3, n));
    AnalyticityReport ok = analyticity_diagnostic(f, cpp_rational(1, 2), 1);
    CHECK(ok.pass);
    CHECK(ok.first_violation == -1);

    f.coeffs[8] = I(ctx, 2);  // valuation 0 < 8 * (1/2)
    AnalyticityReport bad = analyticity_diagnostic(f, cpp_rational(1, 2), 1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_violation == 8);
    CHECK_THROWS_AS(analyticity_diagnostic(f, cpp_rational(1, 2), 20),
                    std::invalid_argument);
}

TEST_CASE("factorial coefficient view round-trips and rejects") {
    PrimeContext ctx(2, 10);
    MahlerSeries f = zero_series(ctx, 5);
    cpp_int fact = 1;
    for (long n = 0; n < 5; ++n) {
        if (n > 0) fact *= n;
        f.coeffs[n] = Scalar::from_integer(ctx, fact * (n + 1));
    }
    FactorialCoeffView view = FactorialCoeffView::from_series(f);
    CHECK(view.bound_valuation == 0);
    CHECK(coefficient_residual(to_series(view), f) >= 10);

    MahlerSeries bad = zero_series(ctx, 4);
    bad.coeffs[2] = I(ctx, 1);  // v_2(1) = 0 < v_2(2!) = 1
    CHECK_THROWS_AS(FactorialCoeffView::from_series(bad), std::domain_error);
}
