#pragma once

#include "padic/mahler.hpp"

namespace padic {

/// S(f)(x) = f(x) - x f(x-1); on Mahler coefficients b_n -> b_n - n b_{n-1}.
MahlerSeries apply_S(const MahlerSeries& f);

/// S^{-1}(g): Mahler coefficients a_n = sum_{k<=n} (n!/k!) b_k via the
/// first-order recurrence a_n = n a_{n-1} + b_n. The output tail bound
/// combines the input tail with min_k (v_p(N!) - v_p(k!) + v_p(b_k)).
MahlerSeries inv_S(const MahlerSeries& g);

/// Direct evaluation S^{-1}(g)(x) = sum_n (x)_n g(x - n), an independent
/// route to the same value as eval(inv_S(g), x).
Scalar eval_inv_S_direct(const MahlerSeries& g, const Scalar& x);

/// S^m for any integer m (negative m applies inv_S repeatedly).
MahlerSeries iterate_S(const MahlerSeries& f, long m);

/// Closed form S^m(f)(x) = sum_{k<=m} (-1)^k C(m,k) (x)_k f(x-k), m >= 0.
Scalar eval_iterate_S_closed(const MahlerSeries& f, long m, const Scalar& x);

/// The unique continuous solution of a_n = n a_{n-1} + g(n): returns
/// a_0..a_{n_max}, equal to eval(inv_S(g), n).
std::vector<Scalar> solve_factorial_recurrence(const MahlerSeries& g,
                                               long n_max);

}  // namespace padic
