#pragma once

#include <optional>
#include <string>

#include "padic/context.hpp"

namespace padic {

/// An element of Q_p known to a finite absolute precision.
///
/// A scalar is in one of three states:
///   - exact zero: the distinguished true zero (valuation +infinity);
///   - regular: x = unit * p^valuation with unit coprime to p, and x is
///     known modulo p^precision (valuation < precision);
///   - zero to precision: all that is known is v_p(x) >= precision.
///
/// Absolute precision propagates conservatively through arithmetic:
/// add/sub keep the minimum of the operand precisions, mul/div keep the
/// minimum relative precision (digits of the unit). Exactly-known
/// inputs are embedded with the context guard so repeated division by
/// n! inside a truncation window does not erode the displayed digits.
class Scalar {
  public:
    Scalar() = default;

    /// Exact zero in the given context.
    static Scalar zero(const PrimeContext& ctx);
    /// "Zero as far as we know": v_p(x) >= prec.
    static Scalar zero_to_precision(const PrimeContext& ctx, val_t prec);
    /// Embed an exactly-known integer at precision ctx.precision + ctx.guard.
    static Scalar from_integer(const PrimeContext& ctx, const cpp_int& n);
    /// Embed an exactly-known rational (denominator may be divisible by p).
    static Scalar from_rational(const PrimeContext& ctx, const cpp_rational& r);
    /// A value given as residue * p^0 known mod p^prec (residue may share
    /// factors with p; they are absorbed into the valuation).
    static Scalar from_residue(const PrimeContext& ctx, const cpp_int& residue,
                               val_t prec);
    /// unit * p^val known mod p^prec; unit must be coprime to p.
    static Scalar from_unit(const PrimeContext& ctx, cpp_int unit, val_t val,
                            val_t prec);

    const PrimeContext& context() const { return ctx_; }
    bool is_exact_zero() const { return exact_zero_; }
    bool is_zero_to_precision() const { return !exact_zero_ && unit_ == 0; }
    bool is_regular() const { return !exact_zero_ && unit_ != 0; }

    /// Exact valuation; throws unless the state determines it.
    val_t valuation() const;
    /// Certified lower bound on v_p: valuation, precision, or +inf.
    val_t valuation_lower_bound() const;
    /// Absolute precision exponent (meaningless for exact zero).
    val_t precision() const { return prec_; }
    const cpp_int& unit() const { return unit_; }

    /// The canonical residue of x * p^{-min(valuation,0)} modulo
    /// p^{precision - min(valuation,0)} (an integer representative).
    cpp_int integer_residue() const;

    Scalar reduced_to_precision(val_t prec) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    std::string str() const;

  private:
    PrimeContext ctx_{};
    bool exact_zero_ = true;
    val_t valuation_ = 0;
    cpp_int unit_ = 0;
    val_t prec_ = 0;

    void normalize();
    static void check_context(const Scalar& a, const Scalar& b);
};

/// Certified lower bound on v_p(a - b).
val_t residual_valuation(const Scalar& a, const Scalar& b);

/// a == b modulo p^required.
bool congruent(const Scalar& a, const Scalar& b, val_t required);

/// Modular inverse of u modulo m (u coprime to m).
cpp_int mod_inverse(const cpp_int& u, const cpp_int& m);

/// Falling factorial (x)_n = x(x-1)...(x-n+1).
Scalar falling_factorial(const Scalar& x, long n);

/// Binomial-coefficient function beta_n(x) = C(x, n) = (x)_n / n!.
/// For x in Z_p the value lies in Z_p.
Scalar binom(const Scalar& x, long n);

/// Exact integer binomial C(m, n) for any integer m (possibly negative).
cpp_int binom_int(const cpp_int& m, long n);

/// p-adic exponential. Requires v_p(x) >= 1 for odd p, >= 2 for p = 2
/// (the series diverges otherwise, e.g. exp(2) at p = 2).
Scalar exp_padic(const Scalar& x);

/// (1 + (u-1))^x = sum_n (u-1)^n C(x,n) for a one-unit u and x in Z_p.
Scalar pow_one_unit(const Scalar& u, const Scalar& x);

}  // namespace padic
