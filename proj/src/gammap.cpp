#include "padic/gammap.hpp"

namespace padic {

MahlerSeries q_series(const PrimeContext& ctx, long N) {
    MahlerSeries f{ctx, {}, factorial_valuation(N, ctx.p)};
    f.coeffs.reserve(N);
    cpp_int fact = 1;
    for (long n = 0; n < N; ++n) {
        if (n > 0) fact *= n;
        f.coeffs.push_back(Scalar::from_integer(ctx, fact));
    }
    return f;
}

MahlerSeries g_series(const PrimeContext& ctx, const GammaParameter& r, long N) {
    if (r.r == 1) return constant_series(ctx, cpp_int(1), N);
    val_t vr = rational_valuation(r.r - 1, ctx.p);
    MahlerSeries f{ctx, {}, N * vr};
    f.coeffs.reserve(N);
    cpp_rational pw = 1;
    for (long n = 0; n < N; ++n) {
        f.coeffs.push_back(Scalar::from_rational(ctx, pw));
        pw *= r.r - 1;
    }
    return f;
}

MahlerSeries f_r_series(const PrimeContext& ctx, const GammaParameter& r, long N) {
    return inv_S(g_series(ctx, r, N));
}

Scalar exp_r_ptilde(const PrimeContext& ctx, const GammaParameter& r) {
    Scalar arg = Scalar::from_rational(ctx, r.r * ctx.p_tilde());
    return exp_padic(arg);
}

Scalar gamma_bar_eval(const PrimeContext& ctx, const GammaParameter& r,
                      const Scalar& x, long N) {
    Scalar xm1 = x - Scalar::from_integer(ctx, 1);
    return exp_r_ptilde(ctx, r) * eval(f_r_series(ctx, r, N), xm1);
}

Scalar gamma_bar_closed_eval(const PrimeContext& ctx, const GammaParameter& r,
                             const Scalar& x, long N) {
    Scalar xm1 = x - Scalar::from_integer(ctx, 1);
    Scalar rs = Scalar::from_rational(ctx, r.r);
    Scalar sum = Scalar::zero(ctx);
    Scalar fall = Scalar::from_integer(ctx, 1);  // (x-1)_n = n! C(x-1, n)
    for (long n = 0; n < N; ++n) {
        if (n > 0) fall *= xm1 - Scalar::from_integer(ctx, n - 1);
        // r^{x-1-n} with exponent in Z_p
        Scalar expnt = xm1 - Scalar::from_integer(ctx, n);
        sum += fall * pow_one_unit(rs, expnt);
    }
    sum = sum.reduced_to_precision(factorial_valuation(N, ctx.p));
    return exp_r_ptilde(ctx, r) * sum;
}

SymbolicGamma gamma_oracle(const cpp_rational& r, long n) {
    if (n < 1) throw std::invalid_argument("gamma_oracle: n must be >= 1");
    SymbolicGamma g{0, 1, 1, r};
    cpp_rational rpow = r;  // r^k at step k
    for (long k = 1; k < n; ++k) {
        g.A *= k;
        g.B = cpp_rational(k) * g.B + rpow;
        rpow *= r;
        ++g.n;
    }
    return g;
}

Scalar tau_p_apply(const PrimeContext& ctx, const SymbolicGamma& g) {
    Scalar image_of_exp = exp_padic(Scalar::from_rational(ctx, g.r * ctx.p_tilde()));
    return Scalar::from_rational(ctx, g.A) +
           Scalar::from_rational(ctx, g.B) * image_of_exp;
}

}  // namespace padic
