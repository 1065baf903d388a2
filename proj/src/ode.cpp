#include "padic/ode.hpp"

namespace padic {

BoundedPowerSeries j_map(const MahlerSeries& f) {
    FactorialCoeffView view = FactorialCoeffView::from_series(f);
    BoundedPowerSeries F{f.ctx, {}, kValInf};
    F.coeffs.reserve(view.coeffs.size());
    for (long n = 0; n < static_cast<long>(view.coeffs.size()); ++n) {
        Scalar c = view.coeffs[n];
        if (n > 0) c -= view.coeffs[n - 1];
        F.bound_valuation =
            val_min(F.bound_valuation, c.valuation_lower_bound());
        F.coeffs.push_back(std::move(c));
    }
    return F;
}

MahlerSeries j_inverse(const BoundedPowerSeries& F) {
    FactorialCoeffView view{F.ctx, {}, kValInf};
    view.coeffs.reserve(F.window());
    Scalar acc = Scalar::zero(F.ctx);
    for (long n = 0; n < F.window(); ++n) {
        acc += F.coeffs[n];
        view.bound_valuation =
            val_min(view.bound_valuation, acc.valuation_lower_bound());
        view.coeffs.push_back(acc);
    }
    return to_series(view);
}

BoundedPowerSeries apply_Q(const BoundedPowerSeries& F) {
    BoundedPowerSeries D{F.ctx, {}, kValInf};
    D.coeffs.reserve(std::max<long>(F.window() - 1, 0));
    for (long n = 0; n + 1 < F.window(); ++n) {
        D.coeffs.push_back(Scalar::from_integer(F.ctx, n + 1) *
                               F.coeffs[n + 1] +
                           F.coeffs[n]);
        D.bound_valuation = val_min(D.bound_valuation,
                                    D.coeffs.back().valuation_lower_bound());
    }
    return one_minus_t_times(D);
}

DESolution solve_linear_de(const BoundedPowerSeries& G) {
    DESolution sol;
    MahlerSeries r =
        to_series(FactorialCoeffView{G.ctx, G.coeffs, G.bound_valuation});
    sol.f = inv_S(shift(r, -1));
    sol.F = j_map(sol.f);
    sol.coeff_valuation_bound = sol.F.bound_valuation;
    sol.residual_window = std::min(sol.F.window(), G.window() + 1) - 1;
    for (long n = 0; n < sol.residual_window; ++n) {
        Scalar lhs = Scalar::from_integer(G.ctx, n + 1) * sol.F.coeffs[n + 1] +
                     sol.F.coeffs[n];
        sol.min_residual_valuation = val_min(
            sol.min_residual_valuation, residual_valuation(lhs, G.coeffs[n]));
    }
    return sol;
}

BoundedPowerSeries solve_de_from_f0(const BoundedPowerSeries& G,
                                    const Scalar& f0) {
    BoundedPowerSeries F{G.ctx, {f0}, f0.valuation_lower_bound()};
    F.coeffs.reserve(G.window() + 1);
    for (long n = 0; n < G.window(); ++n) {
        F.coeffs.push_back((G.coeffs[n] - F.coeffs[n]) /
                           Scalar::from_integer(G.ctx, n + 1));
        F.bound_valuation = val_min(F.bound_valuation,
                                    F.coeffs.back().valuation_lower_bound());
    }
    return F;
}

}  // namespace padic
