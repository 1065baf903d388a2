#include "padic/sigma.hpp"

namespace padic {

MahlerSeries apply_S(const MahlerSeries& f) {
    const long N = f.window();
    MahlerSeries g{f.ctx, {}, f.tail_valuation};
    g.coeffs.reserve(N);
    for (long n = 0; n < N; ++n) {
        Scalar c = f.coeffs[n];
        if (n > 0)
            c -= Scalar::from_integer(f.ctx, n) * f.coeffs[n - 1];
        g.coeffs.push_back(std::move(c));
    }
    // coefficient N of the result involves the in-window a_{N-1}
    if (N >= 1)
        g.tail_valuation = val_min(f.tail_valuation,
                                   f.coeffs[N - 1].valuation_lower_bound());
    return g;
}

MahlerSeries inv_S(const MahlerSeries& g) {
    const long N = g.window();
    MahlerSeries f{g.ctx, {}, g.tail_valuation};
    f.coeffs.reserve(N);
    Scalar acc = Scalar::zero(g.ctx);
    for (long n = 0; n < N; ++n) {
        acc = Scalar::from_integer(g.ctx, n) * acc + g.coeffs[n];
        f.coeffs.push_back(acc);
    }
    // |sum_{k<=n} (n!/k!) b_k| for n >= N, as in the local-analyticity bound
    val_t vN = factorial_valuation(N, g.ctx.p);
    val_t tail = g.tail_valuation;
    for (long k = 0; k < N; ++k)
        tail = val_min(tail,
                       val_add(vN - factorial_valuation(k, g.ctx.p),
                               g.coeffs[k].valuation_lower_bound()));
    f.tail_valuation = tail;
    return f;
}

Scalar eval_inv_S_direct(const MahlerSeries& g, const Scalar& x) {
    if (!x.is_exact_zero() && x.valuation_lower_bound() < 0)
        throw std::domain_error("eval_inv_S_direct: x is not in Z_p");
    const long N = g.window();
    Scalar sum = Scalar::zero(g.ctx);
    Scalar fall = Scalar::from_integer(g.ctx, 1);
    for (long n = 0; n < N; ++n) {
        if (n > 0) fall *= x - Scalar::from_integer(g.ctx, n - 1);
        sum += fall * eval(g, x - Scalar::from_integer(g.ctx, n));
    }
    // omitted terms: |(x)_n g(x-n)| <= |N!| * sup|g|
    return sum.reduced_to_precision(
        val_add(factorial_valuation(N, g.ctx.p), sup_valuation_bound(g)));
}

MahlerSeries iterate_S(const MahlerSeries& f, long m) {
    MahlerSeries g = f;
    for (long i = 0; i < (m >= 0 ? m : -m); ++i)
        g = m >= 0 ? apply_S(g) : inv_S(g);
    return g;
}

Scalar eval_iterate_S_closed(const MahlerSeries& f, long m, const Scalar& x) {
    if (m < 0)
        throw std::invalid_argument("eval_iterate_S_closed: m must be >= 0");
    Scalar sum = Scalar::zero(f.ctx);
    Scalar fall = Scalar::from_integer(f.ctx, 1);
    for (long k = 0; k <= m; ++k) {
        if (k > 0) fall *= x - Scalar::from_integer(f.ctx, k - 1);
        cpp_int c = binom_int(m, k);
        if (k % 2 == 1) c = -c;
        sum += Scalar::from_integer(f.ctx, c) * fall *
               eval(f, x - Scalar::from_integer(f.ctx, k));
    }
    return sum;
}

std::vector<Scalar> solve_factorial_recurrence(const MahlerSeries& g,
                                               long n_max) {
    std::vector<Scalar> out;
    out.reserve(n_max + 1);
    Scalar acc = Scalar::zero(g.ctx);
    for (long n = 0; n <= n_max; ++n) {
        acc = Scalar::from_integer(g.ctx, n) * acc +
              eval_at_int(g, n);
        out.push_back(acc);
    }
    return out;
}

}  // namespace padic
