#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polyafreq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Natural log of |x| for an arbitrarily large integer. Returns -inf for 0.
inline double log_abs(const Integer& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    Integer a = abs(x);
    const std::size_t bits = msb(a) + 1;
    if (bits <= 960) return std::log(a.convert_to<double>());
    Integer top = a >> (bits - 960);
    return std::log(top.convert_to<double>()) +
           static_cast<double>(bits - 960) * std::numbers::ln2_v<double>;
}

inline double log_abs(const Rational& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    return log_abs(numerator(x)) - log_abs(denominator(x));
}

inline int sign_of(const Rational& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

/// Double value of a rational that may be far outside double range.
inline double to_double_lossy(const Rational& x) {
    const double la = log_abs(x);
    if (la == -std::numeric_limits<double>::infinity()) return 0.0;
    if (la > 700.0) return sign_of(x) * std::numeric_limits<double>::infinity();
    if (la < -700.0) return 0.0;
    return x.convert_to<double>();
}

inline Integer factorial_int(std::int64_t n) {
    Integer f = 1;
    for (std::int64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial_int(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;
    }
    return b;
}

inline Integer pow_int(const Integer& base, std::int64_t e) {
    Integer r = 1, b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

/// Sign and natural log of magnitude; the carrier for coefficients whose
/// magnitude exceeds double range.
struct LogReal {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogReal zero() { return {}; }
    static LogReal from_double(double v) {
        if (v == 0.0) return {};
        return {std::log(std::abs(v)), v < 0 ? -1 : 1};
    }
    static LogReal from_rational(const Rational& r) {
        return {polyafreq::log_abs(r), sign_of(r)};
    }
    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_abs);
    }
};

/// log(e^a + e^b) without overflow.
inline double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

/// Signed addition in the log domain.
inline LogReal log_add(const LogReal& x, const LogReal& y) {
    if (x.sign == 0) return y;
    if (y.sign == 0) return x;
    if (x.sign == y.sign) return {log_add_exp(x.log_abs, y.log_abs), x.sign};
    if (x.log_abs == y.log_abs) return LogReal::zero();
    const LogReal& big = x.log_abs > y.log_abs ? x : y;
    const LogReal& small = x.log_abs > y.log_abs ? y : x;
    const double diff = big.log_abs + std::log1p(-std::exp(small.log_abs - big.log_abs));
    return {diff, big.sign};
}

inline LogReal log_mul(const LogReal& x, const LogReal& y) {
    if (x.sign == 0 || y.sign == 0) return LogReal::zero();
    return {x.log_abs + y.log_abs, x.sign * y.sign};
}

}  // namespace polyafreq
