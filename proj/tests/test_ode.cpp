#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/ode.hpp"

using namespace padic;

namespace {
Scalar I(const PrimeContext& ctx, long n) {
    return Scalar::from_integer(ctx, n);
}
}  // namespace

TEST_CASE("J map values") {
    PrimeContext ctx(3, 10);
    long N = 12;
    // factorial view of q is all ones, so J_q = 1
    BoundedPowerSeries jq = j_map(q_series(ctx, N));
    CHECK(congruent(jq.coeffs[0], I(ctx, 1), 10));
    for (long n = 1; n < N; ++n)
        CHECK(jq.coeffs[n].valuation_lower_bound() >= 10);
    // J of the indicator coefficient beta_0 is 1 - t
    BoundedPowerSeries jb = j_map(beta_series(ctx, 0, N));
    CHECK(congruent(jb.coeffs[0], I(ctx, 1), 10));
    CHECK(congruent(jb.coeffs[1], I(ctx, -1), 10));
    for (long n = 2; n < N; ++n)
        CHECK(jb.coeffs[n].valuation_lower_bound() >= 10);
    // J of the zero function is 0
    for (const Scalar& c : j_map(zero_series(ctx, N)).coeffs)
        CHECK(c.is_exact_zero());
    // round trip
    CHECK(coefficient_residual(j_inverse(jq), q_series(ctx, N)) >= 10);
}

TEST_CASE("Q on explicit polynomials") {
    PrimeContext ctx(3, 10);
    BoundedPowerSeries one{ctx, {I(ctx, 1), I(ctx, 0), I(ctx, 0)}, 0};
    BoundedPowerSeries q1 = apply_Q(one);  // (1-t)(0 + 1) = 1 - t
    CHECK(congruent(q1.coeffs[0], I(ctx, 1), 10));
    CHECK(congruent(q1.coeffs[1], I(ctx, -1), 10));
    BoundedPowerSeries t{ctx, {I(ctx, 0), I(ctx, 1), I(ctx, 0)}, 0};
    BoundedPowerSeries q2 = apply_Q(t);  // (1-t)(1+t) = 1 - t^2
    CHECK(congruent(q2.coeffs[0], I(ctx, 1), 10));
    CHECK(congruent(q2.coeffs[1], I(ctx, 0), 10));
}

TEST_CASE("solver on constant and all-ones right-hand sides") {
    PrimeContext ctx(3, 12);
    long N = default_window(ctx);
    // G = 1 -> F = 1
    BoundedPowerSeries G1{ctx, {}, kValInf};
    G1.coeffs.assign(N, Scalar::zero(ctx));
    G1.coeffs[0] = I(ctx, 1);
    G1.bound_valuation = 0;
    DESolution s1 = solve_linear_de(G1);
    CHECK(congruent(s1.F.coeffs[0], I(ctx, 1), 10));
    for (long n = 1; n + 1 < N; ++n)
        CHECK(s1.F.coeffs[n].valuation_lower_bound() >= 10);
    CHECK(s1.min_residual_valuation >= 10);

    // G = 1/(1-t): all g_n = 1
    BoundedPowerSeries G2{ctx, {}, 0};
    G2.coeffs.assign(N, I(ctx, 1));
    DESolution s2 = solve_linear_de(G2);
    CHECK(s2.residual_window == N - 1);
    CHECK(s2.min_residual_valuation >= 10);
    CHECK(s2.coeff_valuation_bound >= 0);
    // independent residual recomputation
    for (long n = 0; n + 1 < N; ++n) {
        Scalar lhs = I(ctx, n + 1) * s2.F.coeffs[n + 1] + s2.F.coeffs[n];
        CHECK(congruent(lhs, I(ctx, 1), 10));
    }
}

TEST_CASE("direct recurrence cross-check") {
    PrimeContext ctx(5, 12);
    long N = default_window(ctx);
    BoundedPowerSeries G{ctx, {}, 0};
    for (long n = 0; n < N; ++n) G.coeffs.push_back(I(ctx, 3 * n + 2));
    DESolution sol = solve_linear_de(G);
    BoundedPowerSeries F2 = solve_de_from_f0(G, sol.F.coeffs[0]);
    for (long n = 0; n < N; ++n)
        CHECK(residual_valuation(sol.F.coeffs[n], F2.coeffs[n]) +
                  factorial_valuation(n, 5) >=
              10);
}

TEST_CASE("exp(-t) violates every coefficient bound") {
    // the homogeneous candidate has coefficients 1/n!, unbounded below
    PrimeContext ctx(3, 12);
    long N = default_window(ctx);
    bool violated = false;
    for (long n = 0; n < N && !violated; ++n)
        violated = -factorial_valuation(n, 3) < 0;
    CHECK(violated);
}

TEST_CASE("Q intertwines J with the shifted automorphism") {
    PrimeContext ctx(2, 12);
    long N = default_window(ctx);
    MahlerSeries f = zero_series(ctx, N);
    cpp_int fact = 1;
    for (long n = 0; n < N; ++n) {
        if (n > 0) fact *= n;
        f.coeffs[n] = Scalar::from_integer(ctx, fact * (2 * n + 1));
    }
    CHECK(coefficient_residual(apply_Q(j_map(f)),
                               j_map(shift(apply_S(f), 1))) >= 10);
}
