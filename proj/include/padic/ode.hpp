#pragma once

#include "padic/measures.hpp"

namespace padic {

/// J: f -> sum (a_n - a_{n-1}) t^n over the factorial view a_n of f
/// (a_{-1} = 0), i.e. (1 - t) times the factorial-view series. Requires
/// every Mahler coefficient of f divisible by n! within precision.
BoundedPowerSeries j_map(const MahlerSeries& f);

/// J^{-1}: cumulative sums of the coefficients restore the factorial
/// view, which is rebuilt into a Mahler series.
MahlerSeries j_inverse(const BoundedPowerSeries& F);

/// Q(F) = (1 - t)(F' + F); intertwines with the shifted automorphism:
/// Q(J_f) = J_g where g(x) = S(f)(x + 1).
BoundedPowerSeries apply_Q(const BoundedPowerSeries& F);

struct DESolution {
    BoundedPowerSeries F;  // power-series solution of F' + F = G
    MahlerSeries f;        // F = J_f, the boundedness witness
    long residual_window = 0;
    val_t min_residual_valuation = kValInf;  // over (n+1)F_{n+1}+F_n-G_n
    val_t coeff_valuation_bound = kValInf;   // min v_p(F_n) on the window
};

/// The unique solution of F' + F = G whose coefficients stay p-adically
/// bounded: F = J_f with f = S^{-1}(U^{-1}(r)), r = sum n! g_n beta_n.
DESolution solve_linear_de(const BoundedPowerSeries& G);

/// Term-by-term recurrence F_{n+1} = (G_n - F_n) / (n + 1) from a
/// prescribed constant term; independent cross-check of solve_linear_de,
/// which instead pins F_0 down by boundedness.
BoundedPowerSeries solve_de_from_f0(const BoundedPowerSeries& G,
                                    const Scalar& f0);

}  // namespace padic
