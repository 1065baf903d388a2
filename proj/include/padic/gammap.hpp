#pragma once

#include "padic/sigma.hpp"

namespace padic {

/// The parameter r of the family g_r(x) = r^x: an exact rational with
/// v_p(r - 1) >= 1, so that r is a one-unit and the symbolic oracle can
/// run in exact rational arithmetic.
struct GammaParameter {
    cpp_rational r;

    GammaParameter(const PrimeContext& ctx, cpp_rational value) : r(std::move(value)) {
        if (r != 1 && rational_valuation(r - 1, ctx.p) < 1)
            throw std::domain_error("gamma parameter: r must lie in 1 + pZ_p");
    }
};

/// q = S^{-1}(1) = sum n! C(x,n); the unique continuous solution of
/// a_n = n a_{n-1} + 1.
MahlerSeries q_series(const PrimeContext& ctx, long N);

/// g_r(x) = r^x with Mahler coefficients (r-1)^n.
MahlerSeries g_series(const PrimeContext& ctx, const GammaParameter& r, long N);

/// f_r = S^{-1}(g_r); satisfies f_r(x) = x f_r(x-1) + r^x and f_1 = q.
MahlerSeries f_r_series(const PrimeContext& ctx, const GammaParameter& r, long N);

/// exp(r * p~) as a scalar.
Scalar exp_r_ptilde(const PrimeContext& ctx, const GammaParameter& r);

/// The p-adic incomplete Gamma interpolant:
/// gamma_bar_r(x) = exp(r p~) f_r(x - 1); gamma_bar_r(1) = exp(r p~).
Scalar gamma_bar_eval(const PrimeContext& ctx, const GammaParameter& r,
                      const Scalar& x, long N);

/// The direct-sum closed form exp(r p~) sum_n n! C(x-1, n) r^{x-1-n},
/// an independent route to gamma_bar_eval.
Scalar gamma_bar_closed_eval(const PrimeContext& ctx, const GammaParameter& r,
                             const Scalar& x, long N);

/// Gamma(n, r) = A + B e^{-r} as exact rationals; computed by the
/// recurrence A_{n+1} = n A_n, B_{n+1} = n B_n + r^n from (A_1, B_1) = (0, 1).
struct SymbolicGamma {
    cpp_rational A;
    cpp_rational B;
    long n = 1;
    cpp_rational r;
};

SymbolicGamma gamma_oracle(const cpp_rational& r, long n);

/// The field map Q(e) -> Q_p with e^{-1} -> exp(p~), applied to a
/// symbolic Gamma value: A + B exp(r p~).
Scalar tau_p_apply(const PrimeContext& ctx, const SymbolicGamma& g);

}  // namespace padic
