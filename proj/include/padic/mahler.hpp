#pragma once

#include <vector>

#include "padic/scalar.hpp"

namespace padic {

/// A continuous function Z_p -> Q_p represented by its truncated Mahler
/// expansion f = sum_{n<N} a_n * C(x, n), together with a certified
/// lower bound on v_p(a_n) for every n >= N. Since |C(x,n)| <= 1 on
/// Z_p, evaluation error from the omitted tail is at most p^{-tail}.
///
/// tail_valuation = kValInf marks an exact Mahler polynomial.
struct MahlerSeries {
    PrimeContext ctx;
    std::vector<Scalar> coeffs;
    val_t tail_valuation = kValInf;

    long window() const { return static_cast<long>(coeffs.size()); }
};

/// The constant function c on a window of N coefficients.
MahlerSeries constant_series(const PrimeContext& ctx, const Scalar& c, long N);
MahlerSeries constant_series(const PrimeContext& ctx, const cpp_int& c, long N);

/// beta_k = x -> C(x, k), as an exact polynomial on a window of N >= k+1.
MahlerSeries beta_series(const PrimeContext& ctx, long k, long N);

/// The exact zero function.
MahlerSeries zero_series(const PrimeContext& ctx, long N);

/// Smallest N with v_p(N!) >= precision + 5; identities then hold at
/// full displayed precision after window truncation.
long default_window(const PrimeContext& ctx);

/// Certified lower bound on v_p over all coefficients (stored and tail);
/// bounds the sup-norm of f by p^{-bound}.
val_t sup_valuation_bound(const MahlerSeries& f);

/// sum_{n<N} a_n * C(x, n) for x in Z_p; the result is reduced to the
/// certified precision min(scalar precision, tail_valuation).
Scalar eval(const MahlerSeries& f, const Scalar& x);

/// Evaluation at an exact integer via exact binomial coefficients.
Scalar eval_at_int(const MahlerSeries& f, const cpp_int& m);

/// [f(-1), f(-2), ..., f(-count)].
std::vector<Scalar> values_at_negatives(const MahlerSeries& f, long count);

/// Forward difference: (nabla f)(x) = f(x+1) - f(x); coefficients shift
/// down one place.
MahlerSeries nabla(const MahlerSeries& f);

/// Shift operator U: f -> f(x + direction), direction in {+1, -1}.
/// U uses a_n + a_{n+1}; U^{-1} the truncated alternating tail sums,
/// whose omitted part is certified by tail_valuation.
MahlerSeries shift(const MahlerSeries& f, int direction);

/// Indefinite sum: (Sum f)(n) = f(0) + ... + f(n-1); coefficients shift
/// up one place, (Sum f)(0) = 0 and nabla(Sum f) = f.
MahlerSeries indefinite_sum(const MahlerSeries& f);

MahlerSeries operator+(const MahlerSeries& f, const MahlerSeries& g);
MahlerSeries operator-(const MahlerSeries& f, const MahlerSeries& g);
MahlerSeries scale(const Scalar& c, const MahlerSeries& f);

/// Minimum over the common window of v_p(a_n(f) - a_n(g)); kValInf when
/// every coefficient matches exactly.
val_t coefficient_residual(const MahlerSeries& f, const MahlerSeries& g);

struct AnalyticityReport {
    bool pass = false;
    long first_violation = -1;  // -1 when none
    long window_begin = 0;
    long window_end = 0;
};

/// Finite-window surrogate for the local-analyticity criterion: checks
/// v_p(a_n) >= n * beta for n in [N0, N). A pass is evidence on the
/// window, not a proof about the infinite tail.
AnalyticityReport analyticity_diagnostic(const MahlerSeries& f,
                                         const cpp_rational& beta, long N0);

/// The view of f = sum n! * a_n * C(x,n) by its factorial-scaled
/// coefficients a_n, with a certified valuation bound; membership
/// requires every stored coefficient divisible by n! within precision.
struct FactorialCoeffView {
    PrimeContext ctx;
    std::vector<Scalar> coeffs;   // a_n = (Mahler coeff n) / n!
    val_t bound_valuation = 0;    // v_p(a_n) >= bound for all stored n

    static FactorialCoeffView from_series(const MahlerSeries& f);
};

/// Rebuild the Mahler series sum n! * a_n * C(x,n) from a factorial view.
MahlerSeries to_series(const FactorialCoeffView& view);

}  // namespace padic
