#include "padic/mahler.hpp"

#include <algorithm>

namespace padic {

namespace {

long common_window(const MahlerSeries& f, const MahlerSeries& g) {
    if (f.ctx != g.ctx) throw std::invalid_argument("series context mismatch");
    return std::min(f.window(), g.window());
}

}  // namespace

MahlerSeries constant_series(const PrimeContext& ctx, const Scalar& c, long N) {
    MahlerSeries f{ctx, {}, kValInf};
    f.coeffs.assign(N, Scalar::zero(ctx));
    if (N > 0) f.coeffs[0] = c;
    return f;
}

MahlerSeries constant_series(const PrimeContext& ctx, const cpp_int& c, long N) {
    return constant_series(ctx, Scalar::from_integer(ctx, c), N);
}

MahlerSeries beta_series(const PrimeContext& ctx, long k, long N) {
    if (k < 0 || k >= N)
        throw std::invalid_argument("beta_series: need 0 <= k < N");
    MahlerSeries f{ctx, {}, kValInf};
    f.coeffs.assign(N, Scalar::zero(ctx));
    f.coeffs[k] = Scalar::from_integer(ctx, 1);
    return f;
}

MahlerSeries zero_series(const PrimeContext& ctx, long N) {
    MahlerSeries f{ctx, {}, kValInf};
    f.coeffs.assign(N, Scalar::zero(ctx));
    return f;
}

long default_window(const PrimeContext& ctx) {
    long N = 4;
    while (factorial_valuation(N, ctx.p) < ctx.precision + 5) ++N;
    return N;
}

val_t sup_valuation_bound(const MahlerSeries& f) {
    val_t b = f.tail_valuation;
    for (const Scalar& a : f.coeffs) b = val_min(b, a.valuation_lower_bound());
    return b;
}

Scalar eval(const MahlerSeries& f, const Scalar& x) {
    if (!x.is_exact_zero() && x.valuation_lower_bound() < 0)
        throw std::domain_error("eval: x is not in Z_p");
    const long N = f.window();
    if (N == 0) return Scalar::zero_to_precision(f.ctx, f.tail_valuation);
    // 1/n! for n < N from a single inversion: 1/n! = (n+1) * 1/(n+1)!.
    cpp_int fact = 1;
    for (long n = 2; n < N; ++n) fact *= n;
    std::vector<Scalar> inv_fact(N);
    inv_fact[N - 1] =
        Scalar::from_integer(f.ctx, 1) / Scalar::from_integer(f.ctx, fact);
    for (long n = N - 2; n >= 0; --n)
        inv_fact[n] = inv_fact[n + 1] * Scalar::from_integer(f.ctx, n + 1);
    Scalar sum = Scalar::zero(f.ctx);
    Scalar fall = Scalar::from_integer(f.ctx, 1);  // (x)_n
    for (long n = 0; n < N; ++n) {
        if (n > 0) fall *= x - Scalar::from_integer(f.ctx, n - 1);
        if (f.coeffs[n].is_exact_zero()) continue;
        sum += f.coeffs[n] * fall * inv_fact[n];
    }
    return sum.reduced_to_precision(f.tail_valuation);
}

Scalar eval_at_int(const MahlerSeries& f, const cpp_int& m) {
    Scalar sum = Scalar::zero(f.ctx);
    for (long n = 0; n < f.window(); ++n) {
        if (f.coeffs[n].is_exact_zero()) continue;
        sum += f.coeffs[n] * Scalar::from_integer(f.ctx, binom_int(m, n));
    }
    return sum.reduced_to_precision(f.tail_valuation);
}

std::vector<Scalar> values_at_negatives(const MahlerSeries& f, long count) {
    std::vector<Scalar> out;
    out.reserve(count);
    for (long k = 1; k <= count; ++k) out.push_back(eval_at_int(f, -k));
    return out;
}

MahlerSeries nabla(const MahlerSeries& f) {
    MahlerSeries g{f.ctx, {}, f.tail_valuation};
    if (f.window() >= 1)
        g.coeffs.assign(f.coeffs.begin() + 1, f.coeffs.end());
    return g;
}

MahlerSeries shift(const MahlerSeries& f, int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("shift: direction must be +1 or -1");
    const long N = f.window();
    if (direction == 1) {
        MahlerSeries g{f.ctx, {}, f.tail_valuation};
        g.coeffs.reserve(std::max<long>(N - 1, 0));
        for (long n = 0; n + 1 < N; ++n)
            g.coeffs.push_back(f.coeffs[n] + f.coeffs[n + 1]);
        if (N >= 1)
            g.tail_valuation = val_min(
                f.tail_valuation, f.coeffs[N - 1].valuation_lower_bound());
        return g;
    }
    // U^{-1}: alternating tail sums, truncated at the window edge; the
    // omitted terms all have valuation >= tail_valuation.
    MahlerSeries g{f.ctx, {}, f.tail_valuation};
    g.coeffs.assign(N, Scalar::zero(f.ctx));
    Scalar acc = Scalar::zero(f.ctx);
    for (long n = N - 1; n >= 0; --n) {
        acc = f.coeffs[n] - acc;
        g.coeffs[n] = acc;
    }
    return g;
}

MahlerSeries indefinite_sum(const MahlerSeries& f) {
    MahlerSeries g{f.ctx, {}, f.tail_valuation};
    g.coeffs.reserve(f.window() + 1);
    g.coeffs.push_back(Scalar::zero(f.ctx));
    g.coeffs.insert(g.coeffs.end(), f.coeffs.begin(), f.coeffs.end());
    return g;
}

MahlerSeries operator+(const MahlerSeries& f, const MahlerSeries& g) {
    long N = common_window(f, g);
    MahlerSeries h{f.ctx, {}, val_min(f.tail_valuation, g.tail_valuation)};
    h.coeffs.reserve(N);
    for (long n = 0; n < N; ++n) h.coeffs.push_back(f.coeffs[n] + g.coeffs[n]);
    return h;
}

MahlerSeries operator-(const MahlerSeries& f, const MahlerSeries& g) {
    long N = common_window(f, g);
    MahlerSeries h{f.ctx, {}, val_min(f.tail_valuation, g.tail_valuation)};
    h.coeffs.reserve(N);
    for (long n = 0; n < N; ++n) h.coeffs.push_back(f.coeffs[n] - g.coeffs[n]);
    return h;
}

MahlerSeries scale(const Scalar& c, const MahlerSeries& f) {
    MahlerSeries h{f.ctx, {},
                   val_add(f.tail_valuation, c.valuation_lower_bound())};
    h.coeffs.reserve(f.window());
    for (const Scalar& a : f.coeffs) h.coeffs.push_back(c * a);
    return h;
}

val_t coefficient_residual(const MahlerSeries& f, const MahlerSeries& g) {
    long N = common_window(f, g);
    val_t r = kValInf;
    for (long n = 0; n < N; ++n)
        r = val_min(r, residual_valuation(f.coeffs[n], g.coeffs[n]));
    return r;
}

AnalyticityReport analyticity_diagnostic(const MahlerSeries& f,
                                         const cpp_rational& beta, long N0) {
    if (N0 >= f.window())
        throw std::invalid_argument("analyticity_diagnostic: N0 >= window");
    AnalyticityReport rep;
    rep.window_begin = N0;
    rep.window_end = f.window();
    rep.pass = true;
    for (long n = N0; n < f.window(); ++n) {
        val_t v = f.coeffs[n].valuation_lower_bound();
        // v >= n * beta  <=>  v * den >= n * num
        if (v < kValInf &&
            cpp_int(v) * denominator(beta) < cpp_int(n) * numerator(beta)) {
            rep.pass = false;
            rep.first_violation = n;
            break;
        }
    }
    return rep;
}

FactorialCoeffView FactorialCoeffView::from_series(const MahlerSeries& f) {
    FactorialCoeffView view{f.ctx, {}, kValInf};
    cpp_int fact = 1;
    for (long n = 0; n < f.window(); ++n) {
        if (n > 0) fact *= n;
        val_t vfact = factorial_valuation(n, f.ctx.p);
        const Scalar& c = f.coeffs[n];
        if (c.is_regular() && c.valuation() < vfact)
            throw std::domain_error(
                "factorial view: coefficient " + std::to_string(n) +
                " not divisible by n!");
        if (c.is_zero_to_precision() && c.precision() < vfact)
            throw std::domain_error(
                "factorial view: coefficient " + std::to_string(n) +
                " known to insufficient precision to divide by n!");
        view.coeffs.push_back(c / Scalar::from_integer(f.ctx, fact));
        view.bound_valuation =
            val_min(view.bound_valuation, view.coeffs.back().valuation_lower_bound());
    }
    return view;
}

MahlerSeries to_series(const FactorialCoeffView& view) {
    MahlerSeries f{view.ctx, {}, 0};
    cpp_int fact = 1;
    for (long n = 0; n < static_cast<long>(view.coeffs.size()); ++n) {
        if (n > 0) fact *= n;
        f.coeffs.push_back(view.coeffs[n] * Scalar::from_integer(view.ctx, fact));
    }
    f.tail_valuation = val_add(
        factorial_valuation(view.coeffs.size(), view.ctx.p), view.bound_valuation);
    return f;
}

}  // namespace padic
