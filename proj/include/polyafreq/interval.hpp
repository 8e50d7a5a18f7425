#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyafreq/numeric.hpp"

namespace polyafreq {

/// Closed interval with outward rounding after every operation. Exact zeros
/// stay exact (inflation is relative), so structurally zero determinants of
/// triangular Toeplitz windows remain decidable.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double point) : lo(point), hi(point) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval widened(double l, double h) {
        Interval r(l, h);
        r.inflate();
        return r;
    }

    /// From a (sign, log|v|) pair; bounds widened to absorb exp() rounding.
    static Interval from_log(const LogReal& v) {
        if (v.sign == 0) return Interval(0.0);
        const double mag = std::exp(v.log_abs);
        const double slack = 8 * std::numeric_limits<double>::epsilon();
        double a = mag * (1.0 - slack), b = mag * (1.0 + slack);
        if (v.sign < 0) return Interval(-b, -a);
        return Interval(a, b);
    }

    void inflate() {
        lo = lo == 0.0 ? 0.0 : std::nextafter(lo, -std::numeric_limits<double>::infinity());
        hi = hi == 0.0 ? 0.0 : std::nextafter(hi, std::numeric_limits<double>::infinity());
    }

    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
    bool strictly_negative() const { return hi < 0.0; }
    bool nonnegative() const { return lo >= 0.0; }
    bool is_point_zero() const { return lo == 0.0 && hi == 0.0; }

    Interval operator-() const { return Interval(-hi, -lo); }

    Interval operator+(const Interval& o) const {
        Interval r(lo + o.lo, hi + o.hi);
        r.inflate();
        return r;
    }
    Interval operator-(const Interval& o) const { return *this + (-o); }

    Interval operator*(const Interval& o) const {
        if (is_point_zero() || o.is_point_zero()) return Interval(0.0);
        const double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Interval r(std::min(std::min(a, b), std::min(c, d)),
                   std::max(std::max(a, b), std::max(c, d)));
        r.inflate();
        return r;
    }
};

}  // namespace polyafreq
