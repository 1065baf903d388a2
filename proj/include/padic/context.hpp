#pragma once

#include <climits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace padic {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

/// Valuations are integers extended by +infinity (exact zero).
using val_t = long;
inline constexpr val_t kValInf = LONG_MAX / 4;

inline val_t val_min(val_t a, val_t b) { return a < b ? a : b; }
inline val_t val_add(val_t a, val_t b) {
    if (a >= kValInf || b >= kValInf) return kValInf;
    return a + b;
}

/// Working parameters of a Q_p computation: the prime p, the default
/// absolute precision P (scalars are known mod p^P unless they carry
/// more), and p~ = p for odd p, 4 for p = 2, so that exp(p~) converges.
///
/// `guard` is the number of extra digits carried by exactly-known
/// inputs (integers, rationals). Divisions by n! inside the default
/// truncation window consume at most v_p(N!) ~ P + 5 + p digits, so the
/// guard keeps exact data from becoming the precision bottleneck.
struct PrimeContext {
    long p = 2;
    int precision = 8;
    int guard = 48;

    PrimeContext() = default;
    PrimeContext(long p_, int precision_, int guard_ = 48)
        : p(p_), precision(precision_), guard(guard_) {
        if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("p must be prime");
        if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    }

    long p_tilde() const { return p == 2 ? 4 : p; }

    bool operator==(const PrimeContext& o) const {
        return p == o.p && precision == o.precision;
    }
    bool operator!=(const PrimeContext& o) const { return !(*this == o); }
};

/// p^k for k >= 0.
inline cpp_int pow_p(long p, val_t k) {
    if (k < 0) throw std::invalid_argument("pow_p: negative exponent");
    cpp_int r = 1, b = p;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

/// v_p(n) for a nonzero integer.
inline val_t int_valuation(cpp_int n, long p) {
    if (n == 0) return kValInf;
    val_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// v_p(n!) by Legendre's formula.
inline val_t factorial_valuation(long n, long p) {
    val_t v = 0;
    for (long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p) break;
    }
    return v;
}

inline val_t rational_valuation(const cpp_rational& r, long p) {
    if (r == 0) return kValInf;
    return int_valuation(numerator(r), p) - int_valuation(denominator(r), p);
}

}  // namespace padic
