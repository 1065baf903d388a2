#include "padic/verify.hpp"

#include "padic/gammap.hpp"

namespace padic::verify {

using sampling::Rng;

namespace {

/// Score for a falsification sweep: 1 when the two series are
/// distinguishable well inside certified precision, 0 otherwise.
val_t distinguishable(val_t residual, val_t threshold) {
    return residual < threshold ? 1 : 0;
}

void lipschitz_sweep(ReportBuilder& rb, const MahlerSeries& g, Rng& rng,
                     long pairs) {
    const PrimeContext& ctx = g.ctx;
    for (long i = 0; i < pairs; ++i) {
        long j = static_cast<long>(rng() % (ctx.precision - 2));
        auto [x, y] = sampling::random_close_pair(ctx, rng, j);
        rb.observe(residual_valuation(eval(g, x), eval(g, y)) - j);
    }
}

}  // namespace

std::vector<VerificationReport> sigma_suite(const PrimeContext& ctx,
                                            std::uint64_t seed,
                                            const SweepConfig& cfg) {
    Rng rng(seed);
    const long N = default_window(ctx);
    const val_t P = ctx.precision;
    std::vector<VerificationReport> out;

    ReportBuilder round_trip("sigma/round-trip", P - 2, seed);
    ReportBuilder law("sigma/pointwise-law", P - 2, seed);
    for (long i = 0; i < cfg.series; ++i) {
        MahlerSeries f = sampling::random_decaying_series(ctx, rng, N);
        MahlerSeries g = apply_S(f);
        round_trip.observe(coefficient_residual(inv_S(g), f));
        round_trip.observe(coefficient_residual(apply_S(inv_S(f)), f));
        for (long k = 0; k < cfg.points; ++k) {
            Scalar x = sampling::random_zp(ctx, rng);
            Scalar rhs =
                eval(f, x) - x * eval(f, x - Scalar::from_integer(ctx, 1));
            law.observe(residual_valuation(eval(g, x), rhs));
        }
    }
    out.push_back(round_trip.finish());
    out.push_back(law.finish());

    ReportBuilder iterate("sigma/iterate-closed-form", P - 4, seed);
    {
        MahlerSeries f = sampling::random_decaying_series(ctx, rng, N);
        for (long m = 0; m <= 3; ++m) {
            MahlerSeries fm = iterate_S(f, m);
            for (long k = 0; k < cfg.points / 3; ++k) {
                Scalar x = sampling::random_zp(ctx, rng);
                iterate.observe(residual_valuation(
                    eval_iterate_S_closed(f, m, x), eval(fm, x)));
            }
        }
    }
    out.push_back(iterate.finish());

    ReportBuilder lip_s("sigma/lipschitz-S", 0, seed);
    ReportBuilder lip_inv("sigma/lipschitz-inv-S", 0, seed);
    for (long i = 0; i < cfg.lip_functions; ++i) {
        MahlerSeries f = sampling::random_decaying_series(ctx, rng, N, true);
        lipschitz_sweep(lip_s, apply_S(f), rng, cfg.lip_pairs);
        lipschitz_sweep(lip_inv, inv_S(f), rng, cfg.lip_pairs);
    }
    out.push_back(lip_s.finish());
    out.push_back(lip_inv.finish());
    return out;
}

std::vector<VerificationReport> gamma_suite(const PrimeContext& ctx,
                                            std::uint64_t seed,
                                            const SweepConfig& cfg) {
    Rng rng(seed);
    const long N = default_window(ctx);
    const long p = ctx.p;
    const val_t P = ctx.precision;
    std::vector<VerificationReport> out;

    ReportBuilder interp("gamma/interpolation", P - 2, seed);
    for (cpp_rational rv :
         {cpp_rational(1), cpp_rational(1 + p), cpp_rational(1 - p),
          cpp_rational(1 + 2 * p)}) {
        GammaParameter r(ctx, rv);
        MahlerSeries fr = f_r_series(ctx, r, N);
        Scalar e = exp_r_ptilde(ctx, r);
        for (long n = 1; n <= 10; ++n) {
            Scalar lhs = e * eval_at_int(fr, n - 1);
            interp.observe(
                residual_valuation(lhs, tau_p_apply(ctx, gamma_oracle(rv, n))));
        }
    }
    out.push_back(interp.finish());

    ReportBuilder closed("gamma/closed-form", P - 2, seed);
    {
        GammaParameter r(ctx, cpp_rational(1 + p));
        for (long x = 1; x <= 5; ++x) {
            Scalar xs = Scalar::from_integer(ctx, x);
            closed.observe(
                residual_valuation(gamma_bar_closed_eval(ctx, r, xs, N),
                                   gamma_bar_eval(ctx, r, xs, N)));
        }
    }
    out.push_back(closed.finish());

    ReportBuilder qrec("gamma/q-recurrence", P - 2, seed);
    {
        MahlerSeries q = q_series(ctx, N);
        Scalar one = Scalar::from_integer(ctx, 1);
        for (long i = 0; i < 50; ++i) {
            Scalar x = sampling::random_zp(ctx, rng);
            Scalar lhs = eval(q, x) - x * eval(q, x - one);
            qrec.observe(residual_valuation(lhs, one));
        }
    }
    out.push_back(qrec.finish());

    ReportBuilder alt("gamma/alternating-sum", factorial_valuation(N, p) - 1,
                      seed);
    {
        cpp_int sum = 0, fact = 1;
        for (long n = 0; n < N; ++n) {
            if (n > 0) fact *= n;
            cpp_int term = (n + 2) * fact;
            sum += n % 2 == 0 ? term : -term;
        }
        alt.observe(int_valuation(sum - 1, p));
    }
    out.push_back(alt.finish());

    ReportBuilder altg("gamma/alternating-sum-gamma-r", P - 2, seed);
    for (cpp_rational rv : {cpp_rational(1), cpp_rational(1 + p)}) {
        MahlerSeries fr = f_r_series(ctx, GammaParameter(ctx, rv), N);
        Scalar sum = Scalar::zero(ctx);
        for (long n = 0; n < N; ++n) {
            Scalar term = Scalar::from_integer(ctx, n + 2) * fr.coeffs[n];
            sum += n % 2 == 0 ? term : -term;
        }
        altg.observe(residual_valuation(
            sum, Scalar::from_rational(ctx, 1 / rv)));
    }
    out.push_back(altg.finish());

    ReportBuilder lip("gamma/fr-lipschitz", 0, seed);
    for (cpp_rational rv : {cpp_rational(1), cpp_rational(1 + p)}) {
        MahlerSeries fr = f_r_series(ctx, GammaParameter(ctx, rv), N);
        lipschitz_sweep(lip, fr, rng, cfg.lip_pairs);
    }
    out.push_back(lip.finish());
    return out;
}

std::vector<VerificationReport> measures_suite(const PrimeContext& ctx,
                                               std::uint64_t seed,
                                               const SweepConfig& cfg) {
    Rng rng(seed);
    const long N = default_window(ctx);
    const val_t P = ctx.precision;
    std::vector<VerificationReport> out;

    ReportBuilder symm("measures/pairing-symmetry", P - 4, seed);
    ReportBuilder selfadj("measures/pairing-self-adjoint", P - 4, seed);
    ReportBuilder routes("measures/pairing-routes", P - 4, seed);
    ReportBuilder deriv("measures/derivative-measure", P - 4, seed);
    for (long i = 0; i < cfg.pairs; ++i) {
        MahlerSeries phi = sampling::random_decaying_series(ctx, rng, N);
        MahlerSeries psi = sampling::random_decaying_series(ctx, rng, N);
        Scalar d = pair(phi, psi);
        symm.observe(residual_valuation(d, pair(psi, phi)));
        selfadj.observe(residual_valuation(pair(apply_S(phi), psi),
                                           pair(phi, apply_S(psi))));
        routes.observe(
            residual_valuation(d, pair(phi, psi, PairRoute::integral)));
        routes.observe(
            residual_valuation(d, pair(phi, psi, PairRoute::star_eval)));
        // x phi(x-1) = phi(x) - S(phi)(x)
        BoundedPowerSeries G = sampling::random_bounded_series(ctx, rng, N);
        deriv.observe(residual_valuation(integrate(phi, derivative(G)),
                                         integrate(phi - apply_S(phi), G)));
    }
    out.push_back(symm.finish());
    out.push_back(selfadj.finish());
    out.push_back(routes.finish());
    out.push_back(deriv.finish());

    ReportBuilder staradj("measures/star-adjointness", P - 4, seed);
    ReportBuilder pairprod("measures/pairing-as-product-integral", P - 4, seed);
    ReportBuilder invsq("measures/inv-S-as-star-q", P - 4, seed);
    ReportBuilder tconv("measures/transform-star-diamond", P - 4, seed);
    ReportBuilder tshift("measures/transform-shift", P - 4, seed);
    ReportBuilder tsum("measures/transform-indefinite-sum", P - 4, seed);
    ReportBuilder tint("measures/transform-integral-form", P - 4, seed);
    MahlerSeries q = q_series(ctx, N);
    BoundedPowerSeries hone = h_one(ctx, N);
    for (long i = 0; i < cfg.instances; ++i) {
        MahlerSeries phi = sampling::random_decaying_series(ctx, rng, N);
        MahlerSeries psi = sampling::random_decaying_series(ctx, rng, N);
        staradj.observe(coefficient_residual(star(apply_S(phi), psi),
                                             star(phi, apply_S(psi))));
        pairprod.observe(
            residual_valuation(pair(phi, psi), integrate(star(phi, psi), hone)));
        invsq.observe(coefficient_residual(inv_S(psi), star(q, psi)));

        TransformImage tpsi = transform_T(psi, N);
        TransformImage lhs = transform_T(star(phi, psi), N);
        TransformImage rhs = diamond(transform_T(phi, N), tpsi);
        tconv.observe(coefficient_residual(lhs.image, rhs.image));
        for (long n = 0; n < std::min(lhs.window(), rhs.window()); ++n)
            tconv.observe(residual_valuation(lhs.basis[n], rhs.basis[n]));

        long m = static_cast<long>(rng() % 11) - 5;
        Scalar s = sampling::random_zp(ctx, rng);
        tshift.observe(residual_valuation(
            eval(transform_T(iterate_S(psi, m), N).image, s),
            eval(tpsi.image, s + Scalar::from_integer(ctx, m))));

        tsum.observe(coefficient_residual(
            inv_S(tpsi.image),
            transform_T(scale(Scalar::from_integer(ctx, -1),
                              indefinite_sum(psi)),
                        N)
                .image));

        long mi = static_cast<long>(rng() % 7) - 3;
        tint.observe(residual_valuation(
            eval_at_int(tpsi.image, mi),
            pair(star_pow(one_minus_beta1(ctx, N), mi), psi)));
    }
    out.push_back(staradj.finish());
    out.push_back(pairprod.finish());
    out.push_back(invsq.finish());
    out.push_back(tconv.finish());
    out.push_back(tshift.finish());
    out.push_back(tsum.finish());
    out.push_back(tint.finish());

    // generating-function identities on the first N/2 coefficients; the
    // residual is compensated by the documented v_p(n!) precision loss.
    ReportBuilder gshift("measures/genfun-S-shift", P - 2, seed);
    for (long i = 0; i < 5; ++i) {
        MahlerSeries f = sampling::random_decaying_series(ctx, rng, N);
        BoundedPowerSeries lhs =
            one_minus_t_times(egf_ogf_export(f, N).egf);
        BoundedPowerSeries rhs = egf_ogf_export(apply_S(f), N).egf;
        for (long n = 0; n < N / 2; ++n)
            gshift.observe(
                residual_valuation(lhs.coeffs[n], rhs.coeffs[n]) +
                factorial_valuation(n, ctx.p));
    }
    out.push_back(gshift.finish());

    ReportBuilder gfr("measures/genfun-fr", P - 2, seed);
    for (cpp_rational rv : {cpp_rational(1), cpp_rational(1 + ctx.p)}) {
        MahlerSeries fr = f_r_series(ctx, GammaParameter(ctx, rv), N);
        BoundedPowerSeries E = egf_ogf_export(fr, N).egf;
        // exp(rt)/(1-t): coefficient n is sum_{k<=n} r^k/k!
        cpp_rational partial = 0, rpow = 1, fact = 1;
        for (long n = 0; n < N / 2; ++n) {
            if (n > 0) {
                rpow *= rv;
                fact *= n;
            }
            partial += rpow / fact;
            gfr.observe(residual_valuation(
                            E.coeffs[n], Scalar::from_rational(ctx, partial)) +
                        factorial_valuation(n, ctx.p));
        }
    }
    out.push_back(gfr.finish());

    ReportBuilder fixed("measures/no-fixed-function", 1, seed);
    ReportBuilder lconst("measures/locally-constant-exclusion", 1, seed);
    for (long i = 0; i < 10; ++i) {
        MahlerSeries psi = sampling::random_decaying_series(ctx, rng, N);
        for (long m : {1L, 2L, ctx.p})
            fixed.observe(
                distinguishable(coefficient_residual(iterate_S(psi, m), psi),
                                P - 4));
        TransformImage t = transform_T(psi, N);
        for (long j = 0; j <= 1; ++j) {
            val_t found = 0;
            for (long k = 0; k < 8 && !found; ++k) {
                Scalar s = sampling::random_zp(ctx, rng);
                Scalar step = Scalar::from_integer(ctx, pow_p(ctx.p, j));
                val_t diff =
                    residual_valuation(eval(t.image, s + step), eval(t.image, s));
                found = distinguishable(diff, P - 4);
            }
            lconst.observe(found);
        }
    }
    out.push_back(fixed.finish());
    out.push_back(lconst.finish());
    return out;
}

std::vector<VerificationReport> ode_suite(const PrimeContext& ctx,
                                          std::uint64_t seed,
                                          const SweepConfig& cfg) {
    Rng rng(seed);
    const long N = default_window(ctx);
    const val_t P = ctx.precision;
    std::vector<VerificationReport> out;

    ReportBuilder resid("ode/solver-residual", P - 2, seed);
    ReportBuilder bound("ode/solver-bound", 0, seed);
    ReportBuilder direct("ode/direct-recurrence", P - 2, seed);
    for (long i = 0; i < cfg.solves; ++i) {
        BoundedPowerSeries G = sampling::random_bounded_series(ctx, rng, N);
        DESolution sol = solve_linear_de(G);
        resid.observe(sol.residual_window == N - 1
                          ? sol.min_residual_valuation
                          : 0);
        bound.observe(sol.coeff_valuation_bound);
        BoundedPowerSeries F2 = solve_de_from_f0(G, sol.F.coeffs[0]);
        long W = std::min(sol.F.window(), F2.window());
        for (long n = 0; n < W; ++n)
            direct.observe(residual_valuation(sol.F.coeffs[n], F2.coeffs[n]) +
                           factorial_valuation(n, ctx.p));
    }
    out.push_back(resid.finish());
    out.push_back(bound.finish());
    out.push_back(direct.finish());

    ReportBuilder qj("ode/q-j-law", P - 2, seed);
    for (long i = 0; i < cfg.bfact; ++i) {
        MahlerSeries f = sampling::random_bfact_series(ctx, rng, N);
        BoundedPowerSeries lhs = apply_Q(j_map(f));
        BoundedPowerSeries rhs = j_map(shift(apply_S(f), 1));
        qj.observe(coefficient_residual(lhs, rhs));
    }
    out.push_back(qj.finish());

    ReportBuilder wit("ode/exp-unbounded-witness", 1, seed);
    {
        val_t found = 0;
        for (long n = 0; n < N && !found; ++n)
            if (factorial_valuation(n, ctx.p) > 0) found = 1;
        wit.observe(found);
    }
    out.push_back(wit.finish());
    return out;
}

std::vector<VerificationReport> all_suites(const PrimeContext& ctx,
                                           std::uint64_t seed,
                                           const SweepConfig& cfg) {
    std::vector<VerificationReport> out = sigma_suite(ctx, seed, cfg);
    for (auto&& r : gamma_suite(ctx, seed, cfg)) out.push_back(std::move(r));
    for (auto&& r : measures_suite(ctx, seed, cfg)) out.push_back(std::move(r));
    for (auto&& r : ode_suite(ctx, seed, cfg)) out.push_back(std::move(r));
    return out;
}

}  // namespace padic::verify
