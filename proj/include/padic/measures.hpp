#pragma once

#include "padic/gammap.hpp"

namespace padic {

/// A truncated power series G = sum b_n t^n with a certified lower
/// bound on v_p(b_n) for every n (stored and beyond); such a G defines
/// the measure mu(G) acting on Mahler coefficients by sum a_n b_n.
struct BoundedPowerSeries {
    PrimeContext ctx;
    std::vector<Scalar> coeffs;
    val_t bound_valuation = 0;

    long window() const { return static_cast<long>(coeffs.size()); }
};

/// H_psi(t) = sum (-1)^n psi(-1-n) t^n, the series whose measure
/// realizes the pairing <phi, psi>.
BoundedPowerSeries h_series(const MahlerSeries& psi, long N);

/// H_1(t) = 1/(1+t) materialized as the alternating-coefficient series.
BoundedPowerSeries h_one(const PrimeContext& ctx, long N);

/// int_{Z_p} phi d(mu(G)) = sum a_n b_n, certified by the tail of phi
/// times the coefficient bound of G.
Scalar integrate(const MahlerSeries& phi, const BoundedPowerSeries& G);

/// Formal derivative G'.
BoundedPowerSeries derivative(const BoundedPowerSeries& G);

enum class PairRoute { integral, diagonal, star_eval };

/// The symmetric bilinear pairing <phi, psi>; the three routes are
/// independent computations of the same value (default: diagonal).
Scalar pair(const MahlerSeries& phi, const MahlerSeries& psi,
            PairRoute route = PairRoute::diagonal);

/// Binomial convolution of Mahler coefficients; identity element is the
/// constant function 1.
MahlerSeries star(const MahlerSeries& phi, const MahlerSeries& psi);

struct StarInverse {
    MahlerSeries inverse;
    bool tail_verified = false;  // decay check v_p(c_n) >= v_p(n!) - slack
};

/// Triangular solve for the star-inverse; requires a_0 invertible.
StarInverse star_inverse(const MahlerSeries& phi);

/// phi^{star m}; for m < 0 the star-inverse must exist and is raised to -m.
MahlerSeries star_pow(const MahlerSeries& phi, long m);

/// 1 - beta_1, the star-representer of S.
MahlerSeries one_minus_beta1(const PrimeContext& ctx, long N);

/// T(psi) = sum n! psi(-1-n) C(s, n), the integral-transform image,
/// stored both as a Mahler series and by its coefficients in the
/// S^{-n}(q) basis (which determine it uniquely).
struct TransformImage {
    MahlerSeries image;
    std::vector<Scalar> basis;  // T(psi) = sum basis_n S^{-n}(q)

    long window() const { return static_cast<long>(basis.size()); }
};

TransformImage transform_T(const MahlerSeries& psi, long N);

/// Rebuild the Mahler series of sum basis_n S^{-n}(q) from basis
/// coefficients (S^{-k}(q) has Mahler coefficient (n+k)!/k! at n).
TransformImage transform_from_basis(const PrimeContext& ctx,
                                    std::vector<Scalar> basis);

/// Cross-check of the two stored views; returns the minimum residual
/// valuation over the window.
val_t transform_consistency(const TransformImage& t);

/// The product on the image of T: binomial convolution in the
/// S^{-n}(q) basis.
TransformImage diamond(const TransformImage& a, const TransformImage& b);

/// Ordinary/exponential generating exports of f:
/// E_f = sum f(n) t^n / n!  (precision drops by v_p(n!) per coefficient)
/// and A_f = H_f.
struct GeneratingFunctions {
    BoundedPowerSeries egf;
    BoundedPowerSeries h;
};

GeneratingFunctions egf_ogf_export(const MahlerSeries& f, long N);

/// (1 - t) * F.
BoundedPowerSeries one_minus_t_times(const BoundedPowerSeries& F);

val_t coefficient_residual(const BoundedPowerSeries& F,
                           const BoundedPowerSeries& G);

}  // namespace padic
