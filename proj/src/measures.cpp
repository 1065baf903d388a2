#include "padic/measures.hpp"

#include <algorithm>

namespace padic {

namespace {

/// Certified valuation bound for every omitted term a_k b_l with
/// k + l >= W in a binomial-convolution or diagonal pairing sum.
val_t conv_tail_bound(const MahlerSeries& phi, const MahlerSeries& psi, long W) {
    std::vector<val_t> va(W + 1), vb(W + 1);
    for (long k = 0; k < W; ++k) {
        va[k] = phi.coeffs[k].valuation_lower_bound();
        vb[k] = psi.coeffs[k].valuation_lower_bound();
    }
    va[W] = phi.tail_valuation;
    vb[W] = psi.tail_valuation;
    // suffix minima of vb, index W standing for "any l >= W"
    std::vector<val_t> sb(W + 2, kValInf);
    for (long l = W; l >= 0; --l) sb[l] = val_min(vb[l], sb[l + 1]);
    val_t bound = kValInf;
    for (long k = 0; k <= W; ++k) {
        long l = std::max<long>(W - k, 0);
        if (k == W) l = 0;  // k >= W pairs with every l
        bound = val_min(bound, val_add(va[k], sb[l]));
    }
    return bound;
}

std::vector<cpp_int> factorials(long n) {
    std::vector<cpp_int> f(n + 1);
    f[0] = 1;
    for (long i = 1; i <= n; ++i) f[i] = f[i - 1] * i;
    return f;
}

}  // namespace

BoundedPowerSeries h_series(const MahlerSeries& psi, long N) {
    BoundedPowerSeries G{psi.ctx, {}, sup_valuation_bound(psi)};
    std::vector<Scalar> vals = values_at_negatives(psi, N);
    G.coeffs.reserve(N);
    for (long n = 0; n < N; ++n)
        G.coeffs.push_back(n % 2 == 0 ? vals[n] : -vals[n]);
    return G;
}

BoundedPowerSeries h_one(const PrimeContext& ctx, long N) {
    BoundedPowerSeries G{ctx, {}, 0};
    G.coeffs.reserve(N);
    for (long n = 0; n < N; ++n)
        G.coeffs.push_back(Scalar::from_integer(ctx, n % 2 == 0 ? 1 : -1));
    return G;
}

Scalar integrate(const MahlerSeries& phi, const BoundedPowerSeries& G) {
    if (phi.ctx != G.ctx) throw std::invalid_argument("context mismatch");
    long W = std::min(phi.window(), G.window());
    Scalar sum = Scalar::zero(phi.ctx);
    for (long n = 0; n < W; ++n) sum += phi.coeffs[n] * G.coeffs[n];
    val_t cert = val_add(phi.tail_valuation, G.bound_valuation);
    for (long n = W; n < phi.window(); ++n)
        cert = val_min(cert, val_add(phi.coeffs[n].valuation_lower_bound(),
                                     G.bound_valuation));
    return sum.reduced_to_precision(cert);
}

BoundedPowerSeries derivative(const BoundedPowerSeries& G) {
    BoundedPowerSeries D{G.ctx, {}, G.bound_valuation};
    D.coeffs.reserve(std::max<long>(G.window() - 1, 0));
    for (long n = 0; n + 1 < G.window(); ++n)
        D.coeffs.push_back(Scalar::from_integer(G.ctx, n + 1) * G.coeffs[n + 1]);
    return D;
}

Scalar pair(const MahlerSeries& phi, const MahlerSeries& psi, PairRoute route) {
    if (phi.ctx != psi.ctx) throw std::invalid_argument("context mismatch");
    switch (route) {
        case PairRoute::integral:
            return integrate(phi, h_series(psi, psi.window()));
        case PairRoute::star_eval:
            return eval_at_int(star(phi, psi), -1);
        case PairRoute::diagonal:
            break;
    }
    long W = std::min(phi.window(), psi.window());
    Scalar sum = Scalar::zero(phi.ctx);
    std::vector<cpp_int> row{1};  // Pascal row C(n, .)
    for (long n = 0; n < W; ++n) {
        if (n > 0) {
            row.push_back(1);
            for (long k = n - 1; k >= 1; --k) row[k] += row[k - 1];
        }
        Scalar inner = Scalar::zero(phi.ctx);
        for (long k = 0; k <= n; ++k) {
            if (phi.coeffs[k].is_exact_zero() ||
                psi.coeffs[n - k].is_exact_zero())
                continue;
            inner += Scalar::from_integer(phi.ctx, row[k]) * phi.coeffs[k] *
                     psi.coeffs[n - k];
        }
        sum += n % 2 == 0 ? inner : -inner;
    }
    return sum.reduced_to_precision(conv_tail_bound(phi, psi, W));
}

MahlerSeries star(const MahlerSeries& phi, const MahlerSeries& psi) {
    if (phi.ctx != psi.ctx) throw std::invalid_argument("context mismatch");
    long W = std::min(phi.window(), psi.window());
    MahlerSeries out{phi.ctx, {}, conv_tail_bound(phi, psi, W)};
    out.coeffs.reserve(W);
    std::vector<cpp_int> row{1};
    for (long n = 0; n < W; ++n) {
        if (n > 0) {
            row.push_back(1);
            for (long k = n - 1; k >= 1; --k) row[k] += row[k - 1];
        }
        Scalar c = Scalar::zero(phi.ctx);
        for (long k = 0; k <= n; ++k) {
            if (phi.coeffs[k].is_exact_zero() ||
                psi.coeffs[n - k].is_exact_zero())
                continue;
            c += Scalar::from_integer(phi.ctx, row[k]) * phi.coeffs[k] *
                 psi.coeffs[n - k];
        }
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

StarInverse star_inverse(const MahlerSeries& phi) {
    const long W = phi.window();
    if (W == 0 || !phi.coeffs[0].is_regular() ||
        phi.coeffs[0].valuation() != 0)
        throw std::domain_error("star_inverse: a_0 is not a unit");
    const val_t slack = 2;
    StarInverse res{MahlerSeries{phi.ctx, {}, 0}, true};
    std::vector<Scalar>& c = res.inverse.coeffs;
    c.reserve(W);
    Scalar inv_a0 = Scalar::from_integer(phi.ctx, 1) / phi.coeffs[0];
    c.push_back(inv_a0);
    std::vector<cpp_int> row{1};
    for (long n = 1; n < W; ++n) {
        row.push_back(1);
        for (long k = n - 1; k >= 1; --k) row[k] += row[k - 1];
        Scalar acc = Scalar::zero(phi.ctx);
        for (long k = 1; k <= n; ++k) {
            if (phi.coeffs[k].is_exact_zero() || c[n - k].is_exact_zero())
                continue;
            acc += Scalar::from_integer(phi.ctx, row[k]) * phi.coeffs[k] *
                   c[n - k];
        }
        c.push_back(-(inv_a0 * acc));
        if (c.back().valuation_lower_bound() <
            factorial_valuation(n, phi.ctx.p) - slack)
            res.tail_verified = false;
    }
    res.inverse.tail_valuation =
        res.tail_verified ? factorial_valuation(W, phi.ctx.p) - slack : 0;
    return res;
}

MahlerSeries star_pow(const MahlerSeries& phi, long m) {
    MahlerSeries base = phi;
    if (m < 0) {
        StarInverse inv = star_inverse(phi);
        if (!inv.tail_verified)
            throw std::domain_error(
                "star_pow: inverse tail decay unverified on the window");
        base = inv.inverse;
        m = -m;
    }
    MahlerSeries acc =
        constant_series(phi.ctx, cpp_int(1), phi.window());
    for (long i = 0; i < m; ++i) acc = star(acc, base);
    return acc;
}

MahlerSeries one_minus_beta1(const PrimeContext& ctx, long N) {
    MahlerSeries f = constant_series(ctx, cpp_int(1), N);
    if (N > 1) f.coeffs[1] = Scalar::from_integer(ctx, -1);
    return f;
}

TransformImage transform_T(const MahlerSeries& psi, long N) {
    TransformImage t;
    t.image.ctx = psi.ctx;
    t.image.tail_valuation =
        val_add(factorial_valuation(N, psi.ctx.p), sup_valuation_bound(psi));
    std::vector<Scalar> vals = values_at_negatives(psi, N);
    cpp_int fact = 1;
    t.image.coeffs.reserve(N);
    for (long n = 0; n < N; ++n) {
        if (n > 0) fact *= n;
        t.image.coeffs.push_back(Scalar::from_integer(psi.ctx, fact) * vals[n]);
    }
    t.basis.reserve(psi.window());
    for (long n = 0; n < psi.window(); ++n)
        t.basis.push_back(n % 2 == 0 ? psi.coeffs[n] : -psi.coeffs[n]);
    return t;
}

TransformImage transform_from_basis(const PrimeContext& ctx,
                                    std::vector<Scalar> basis) {
    const long K = static_cast<long>(basis.size());
    TransformImage t;
    t.basis = std::move(basis);
    t.image.ctx = ctx;
    val_t bmin = kValInf;
    for (const Scalar& b : t.basis) bmin = val_min(bmin, b.valuation_lower_bound());
    t.image.tail_valuation = val_add(factorial_valuation(K, ctx.p), bmin);
    std::vector<cpp_int> fact = factorials(2 * K);
    t.image.coeffs.reserve(K);
    for (long n = 0; n < K; ++n) {
        Scalar c = Scalar::zero(ctx);
        for (long k = 0; k < K; ++k) {
            if (t.basis[k].is_exact_zero()) continue;
            c += t.basis[k] * Scalar::from_integer(ctx, fact[n + k] / fact[k]);
        }
        t.image.coeffs.push_back(std::move(c));
    }
    return t;
}

val_t transform_consistency(const TransformImage& t) {
    const PrimeContext& ctx = t.image.ctx;
    const long K = t.window();
    const long W = std::min<long>(K, t.image.window());
    std::vector<cpp_int> fact = factorials(K + W);
    val_t res = kValInf;
    for (long n = 0; n < W; ++n) {
        Scalar c = Scalar::zero(ctx);
        for (long k = 0; k < K; ++k) {
            if (t.basis[k].is_exact_zero()) continue;
            c += t.basis[k] * Scalar::from_integer(ctx, fact[n + k] / fact[k]);
        }
        res = val_min(res, residual_valuation(c, t.image.coeffs[n]));
    }
    return res;
}

TransformImage diamond(const TransformImage& a, const TransformImage& b) {
    const PrimeContext& ctx = a.image.ctx;
    long W = std::min(a.window(), b.window());
    std::vector<Scalar> basis;
    basis.reserve(W);
    std::vector<cpp_int> row{1};
    for (long n = 0; n < W; ++n) {
        if (n > 0) {
            row.push_back(1);
            for (long k = n - 1; k >= 1; --k) row[k] += row[k - 1];
        }
        Scalar c = Scalar::zero(ctx);
        for (long k = 0; k <= n; ++k) {
            if (a.basis[k].is_exact_zero() || b.basis[n - k].is_exact_zero())
                continue;
            c += Scalar::from_integer(ctx, row[k]) * a.basis[k] *
                 b.basis[n - k];
        }
        basis.push_back(std::move(c));
    }
    return transform_from_basis(ctx, std::move(basis));
}

GeneratingFunctions egf_ogf_export(const MahlerSeries& f, long N) {
    GeneratingFunctions g{{f.ctx, {}, kValInf}, h_series(f, N)};
    cpp_int fact = 1;
    g.egf.coeffs.reserve(N);
    for (long n = 0; n < N; ++n) {
        if (n > 0) fact *= n;
        g.egf.coeffs.push_back(eval_at_int(f, n) /
                               Scalar::from_integer(f.ctx, fact));
        g.egf.bound_valuation = val_min(
            g.egf.bound_valuation, g.egf.coeffs.back().valuation_lower_bound());
    }
    return g;
}

BoundedPowerSeries one_minus_t_times(const BoundedPowerSeries& F) {
    BoundedPowerSeries G{F.ctx, {}, F.bound_valuation};
    G.coeffs.reserve(F.window());
    for (long n = 0; n < F.window(); ++n) {
        Scalar c = F.coeffs[n];
        if (n > 0) c -= F.coeffs[n - 1];
        G.coeffs.push_back(std::move(c));
    }
    return G;
}

val_t coefficient_residual(const BoundedPowerSeries& F,
                           const BoundedPowerSeries& G) {
    long W = std::min(F.window(), G.window());
    val_t r = kValInf;
    for (long n = 0; n < W; ++n)
        r = val_min(r, residual_valuation(F.coeffs[n], G.coeffs[n]));
    return r;
}

}  // namespace padic
