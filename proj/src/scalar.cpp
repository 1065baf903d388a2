#include "padic/scalar.hpp"

#include <sstream>

namespace padic {

Scalar Scalar::zero(const PrimeContext& ctx) {
    Scalar s;
    s.ctx_ = ctx;
    s.exact_zero_ = true;
    s.prec_ = kValInf;
    return s;
}

Scalar Scalar::zero_to_precision(const PrimeContext& ctx, val_t prec) {
    Scalar s;
    s.ctx_ = ctx;
    s.exact_zero_ = false;
    s.unit_ = 0;
    s.valuation_ = 0;
    s.prec_ = prec;
    return s;
}

Scalar Scalar::from_integer(const PrimeContext& ctx, const cpp_int& n) {
    if (n == 0) return zero(ctx);
    val_t v = int_valuation(n, ctx.p);
    Scalar s;
    s.ctx_ = ctx;
    s.exact_zero_ = false;
    s.valuation_ = 0;
    s.unit_ = n;
    s.prec_ = v + ctx.precision + ctx.guard;
    s.normalize();
    return s;
}

Scalar Scalar::from_rational(const PrimeContext& ctx, const cpp_rational& r) {
    if (r == 0) return zero(ctx);
    cpp_int num = numerator(r), den = denominator(r);
    val_t vn = int_valuation(num, ctx.p);
    val_t vd = int_valuation(den, ctx.p);
    num /= pow_p(ctx.p, vn);
    den /= pow_p(ctx.p, vd);
    val_t rel = ctx.precision + ctx.guard;
    cpp_int m = pow_p(ctx.p, rel);
    cpp_int unit = num % m * mod_inverse(den % m, m) % m;
    if (unit < 0) unit += m;
    return from_unit(ctx, unit, vn - vd, vn - vd + rel);
}

Scalar Scalar::from_residue(const PrimeContext& ctx, const cpp_int& residue,
                            val_t prec) {
    Scalar s;
    s.ctx_ = ctx;
    s.exact_zero_ = false;
    s.valuation_ = 0;
    s.unit_ = residue;
    s.prec_ = prec;
    s.normalize();
    return s;
}

Scalar Scalar::from_unit(const PrimeContext& ctx, cpp_int unit, val_t val,
                         val_t prec) {
    Scalar s;
    s.ctx_ = ctx;
    s.exact_zero_ = false;
    s.valuation_ = val;
    s.unit_ = std::move(unit);
    s.prec_ = prec;
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (exact_zero_) return;
    if (prec_ <= valuation_ || unit_ == 0) {
        unit_ = 0;
        prec_ = prec_ <= valuation_ ? prec_ : prec_;
        valuation_ = 0;
        return;
    }
    val_t v = int_valuation(unit_, ctx_.p);
    if (v > 0) {
        valuation_ += v;
        if (prec_ <= valuation_) {
            unit_ = 0;
            valuation_ = 0;
            return;
        }
        unit_ /= pow_p(ctx_.p, v);
    }
    cpp_int m = pow_p(ctx_.p, prec_ - valuation_);
    unit_ %= m;
    if (unit_ < 0) unit_ += m;
    if (unit_ == 0) valuation_ = 0;  // reduced away: zero to precision
}

void Scalar::check_context(const Scalar& a, const Scalar& b) {
    if (a.ctx_ != b.ctx_)
        throw std::invalid_argument("scalar context mismatch");
}

val_t Scalar::valuation() const {
    if (exact_zero_) return kValInf;
    if (unit_ == 0)
        throw std::domain_error("valuation indeterminate below precision");
    return valuation_;
}

val_t Scalar::valuation_lower_bound() const {
    if (exact_zero_) return kValInf;
    if (unit_ == 0) return prec_;
    return valuation_;
}

cpp_int Scalar::integer_residue() const {
    if (!is_regular()) return 0;
    val_t m = val_min(valuation_, 0);
    return unit_ * pow_p(ctx_.p, valuation_ - m);
}

Scalar Scalar::reduced_to_precision(val_t prec) const {
    if (exact_zero_) return *this;
    Scalar s = *this;
    s.prec_ = val_min(prec_, prec);
    s.normalize();
    return s;
}

Scalar Scalar::operator-() const {
    if (!is_regular()) return *this;
    Scalar s = *this;
    s.unit_ = pow_p(ctx_.p, prec_ - valuation_) - unit_;
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_context(a, b);
    if (a.exact_zero_) return b;
    if (b.exact_zero_) return a;
    if (a.unit_ == 0 || b.unit_ == 0)
        return a.unit_ == 0 ? b.reduced_to_precision(a.prec_)
                            : a.reduced_to_precision(b.prec_);
    val_t m = val_min(a.valuation_, b.valuation_);
    val_t prec = val_min(a.prec_, b.prec_);
    if (prec <= m) return Scalar::zero_to_precision(a.ctx_, prec);
    cpp_int mod = pow_p(a.ctx_.p, prec - m);
    cpp_int t = (a.unit_ * pow_p(a.ctx_.p, a.valuation_ - m) +
                 b.unit_ * pow_p(b.ctx_.p, b.valuation_ - m)) %
                mod;
    Scalar s;
    s.ctx_ = a.ctx_;
    s.exact_zero_ = false;
    s.valuation_ = m;
    s.unit_ = t;
    s.prec_ = prec;
    s.normalize();
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_context(a, b);
    if (a.exact_zero_ || b.exact_zero_) return Scalar::zero(a.ctx_);
    if (a.unit_ == 0 || b.unit_ == 0) {
        // v(ab) >= vlb(a) + vlb(b); nothing more is known.
        return Scalar::zero_to_precision(
            a.ctx_, val_add(a.valuation_lower_bound(), b.valuation_lower_bound()));
    }
    val_t rel = val_min(a.prec_ - a.valuation_, b.prec_ - b.valuation_);
    val_t val = a.valuation_ + b.valuation_;
    cpp_int mod = pow_p(a.ctx_.p, rel);
    Scalar s;
    s.ctx_ = a.ctx_;
    s.exact_zero_ = false;
    s.valuation_ = val;
    s.unit_ = a.unit_ * b.unit_ % mod;
    s.prec_ = val + rel;
    s.normalize();
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::check_context(a, b);
    if (!b.is_regular())
        throw std::domain_error("division by zero (to working precision)");
    if (a.exact_zero_) return Scalar::zero(a.ctx_);
    if (a.unit_ == 0)
        return Scalar::zero_to_precision(a.ctx_, a.prec_ - b.valuation_);
    val_t rel = val_min(a.prec_ - a.valuation_, b.prec_ - b.valuation_);
    val_t val = a.valuation_ - b.valuation_;
    cpp_int mod = pow_p(a.ctx_.p, rel);
    Scalar s;
    s.ctx_ = a.ctx_;
    s.exact_zero_ = false;
    s.valuation_ = val;
    s.unit_ = a.unit_ % mod * mod_inverse(b.unit_ % mod, mod) % mod;
    s.prec_ = val + rel;
    s.normalize();
    return s;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (exact_zero_) {
        os << "0 (exact)";
    } else if (unit_ == 0) {
        os << "O(" << ctx_.p << "^" << prec_ << ")";
    } else if (valuation_ >= 0) {
        os << integer_residue() << " + O(" << ctx_.p << "^" << prec_ << ")";
    } else {
        os << ctx_.p << "^" << valuation_ << " * " << unit_ << " + O("
           << ctx_.p << "^" << prec_ << ")";
    }
    return os.str();
}

val_t residual_valuation(const Scalar& a, const Scalar& b) {
    return (a - b).valuation_lower_bound();
}

bool congruent(const Scalar& a, const Scalar& b, val_t required) {
    return residual_valuation(a, b) >= required;
}

cpp_int mod_inverse(const cpp_int& u, const cpp_int& m) {
    cpp_int r0 = m, r1 = u % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 != 0) {
        cpp_int q = r0 / r1;
        cpp_int r2 = r0 - q * r1;
        cpp_int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
    if (s0 < 0) s0 += m;
    return s0;
}

Scalar falling_factorial(const Scalar& x, long n) {
    Scalar acc = Scalar::from_integer(x.context(), 1);
    for (long i = 0; i < n; ++i)
        acc *= x - Scalar::from_integer(x.context(), i);
    return acc;
}

Scalar binom(const Scalar& x, long n) {
    if (n < 0) throw std::invalid_argument("binom: n must be >= 0");
    if (n == 0) return Scalar::from_integer(x.context(), 1);
    cpp_int fact = 1;
    for (long i = 2; i <= n; ++i) fact *= i;
    return falling_factorial(x, n) / Scalar::from_integer(x.context(), fact);
}

cpp_int binom_int(const cpp_int& m, long n) {
    if (n < 0) throw std::invalid_argument("binom_int: n must be >= 0");
    cpp_int num = 1;
    for (long i = 0; i < n; ++i) num *= m - i;
    for (long i = 2; i <= n; ++i) num /= i;
    return num;
}

Scalar exp_padic(const Scalar& x) {
    const PrimeContext& ctx = x.context();
    val_t vmin = ctx.p == 2 ? 2 : 1;
    val_t vlb = x.valuation_lower_bound();
    if (vlb < vmin)
        throw std::domain_error("exp_padic: series diverges, need v_p(x) >= " +
                                std::to_string(vmin));
    if (x.is_exact_zero()) return Scalar::from_integer(ctx, 1);
    if (x.is_zero_to_precision())
        return Scalar::from_unit(ctx, 1, 0, x.precision());
    val_t vx = x.valuation();
    val_t target = x.precision();
    Scalar sum = Scalar::from_integer(ctx, 1);
    Scalar term = Scalar::from_integer(ctx, 1);
    for (long k = 1;; ++k) {
        // stop at the first omitted term: v(x^k / k!) >= target
        if (vx * k - factorial_valuation(k, ctx.p) >= target) break;
        term = term * x / Scalar::from_integer(ctx, k);
        sum += term;
    }
    return sum.reduced_to_precision(target);
}

Scalar pow_one_unit(const Scalar& u, const Scalar& x) {
    const PrimeContext& ctx = u.context();
    Scalar d = u - Scalar::from_integer(ctx, 1);
    if (d.valuation_lower_bound() < 1)
        throw std::domain_error("pow_one_unit: u is not a one-unit");
    if (x.valuation_lower_bound() < 0)
        throw std::domain_error("pow_one_unit: x is not in Z_p");
    if (d.is_exact_zero() || x.is_exact_zero())
        return Scalar::from_integer(ctx, 1);
    val_t vd = d.valuation_lower_bound();
    val_t target = val_min(d.precision(), x.precision());
    Scalar sum = Scalar::from_integer(ctx, 1);
    Scalar pw = Scalar::from_integer(ctx, 1);
    Scalar fall = Scalar::from_integer(ctx, 1);
    cpp_int fact = 1;
    for (long n = 1; vd * n < target; ++n) {
        pw *= d;
        fall *= x - Scalar::from_integer(ctx, n - 1);
        fact *= n;
        sum += pw * fall / Scalar::from_integer(ctx, fact);
    }
    return sum.reduced_to_precision(target);
}

}  // namespace padic
