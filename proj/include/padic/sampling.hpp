#pragma once

#include <random>

#include "padic/measures.hpp"

namespace padic::sampling {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound); bias from the modular reduction is
/// negligible at the 64-bit surplus used here.
inline cpp_int random_below(Rng& rng, const cpp_int& bound) {
    if (bound <= 0) throw std::invalid_argument("random_below: bound <= 0");
    unsigned bits = static_cast<unsigned>(msb(bound)) + 1;
    cpp_int r = 0;
    for (unsigned got = 0; got < bits + 64; got += 64)
        r = (r << 64) | cpp_int(rng());
    return r % bound;
}

/// A random element of Z_p known mod p^P.
inline Scalar random_zp(const PrimeContext& ctx, Rng& rng) {
    cpp_int m = pow_p(ctx.p, ctx.precision);
    return Scalar::from_residue(ctx, random_below(rng, m), ctx.precision);
}

/// A random unit of Z_p known mod p^P.
inline Scalar random_unit(const PrimeContext& ctx, Rng& rng) {
    cpp_int m = pow_p(ctx.p, ctx.precision);
    cpp_int u;
    do {
        u = random_below(rng, m);
    } while (u % ctx.p == 0);
    return Scalar::from_residue(ctx, u, ctx.precision);
}

inline long ceil_log_p(long n, long p) {
    long v = 0;
    for (cpp_int q = 1; q < n; q *= p) ++v;
    return v;
}

/// Coefficients with v_p(a_n) >= ceil(n (P+5) / N) + extra(n), each a
/// residue with P relative digits; tail certified at P + 5. With
/// extra = ceil_log_p the sample is 1-Lipschitz.
inline MahlerSeries random_decaying_series(const PrimeContext& ctx, Rng& rng,
                                           long N, bool lipschitz = false) {
    const long T = ctx.precision + 5;
    MahlerSeries f{ctx, {}, T};
    f.coeffs.reserve(N);
    cpp_int m = pow_p(ctx.p, ctx.precision);
    for (long n = 0; n < N; ++n) {
        long floor_v = (n * T + N - 1) / N;
        if (lipschitz) floor_v += ceil_log_p(n, ctx.p);
        f.coeffs.push_back(
            Scalar::from_residue(ctx, random_below(rng, m), ctx.precision) *
            Scalar::from_integer(ctx, pow_p(ctx.p, floor_v)));
    }
    return f;
}

/// f with Mahler coefficients n! * c_n for exact random integers c_n;
/// admits the factorial coefficient view by construction.
inline MahlerSeries random_bfact_series(const PrimeContext& ctx, Rng& rng,
                                        long N) {
    MahlerSeries f{ctx, {}, factorial_valuation(N, ctx.p)};
    f.coeffs.reserve(N);
    cpp_int m = pow_p(ctx.p, ctx.precision);
    cpp_int fact = 1;
    for (long n = 0; n < N; ++n) {
        if (n > 0) fact *= n;
        f.coeffs.push_back(
            Scalar::from_integer(ctx, fact * random_below(rng, m)));
    }
    return f;
}

/// A power series with random Z_p coefficient residues, bound 0.
inline BoundedPowerSeries random_bounded_series(const PrimeContext& ctx,
                                                Rng& rng, long N) {
    BoundedPowerSeries G{ctx, {}, 0};
    G.coeffs.reserve(N);
    for (long n = 0; n < N; ++n) G.coeffs.push_back(random_zp(ctx, rng));
    return G;
}

/// A pair (x, y) with v_p(x - y) exactly j, for Lipschitz sweeps.
inline std::pair<Scalar, Scalar> random_close_pair(const PrimeContext& ctx,
                                                   Rng& rng, long j) {
    Scalar x = random_zp(ctx, rng);
    Scalar d = random_unit(ctx, rng) *
               Scalar::from_integer(ctx, pow_p(ctx.p, j));
    return {x, x + d};
}

}  // namespace padic::sampling
