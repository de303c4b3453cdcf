#pragma once

#include "kuc/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace kuc {

/// Closed interval with exact rational endpoints. Arithmetic is exact,
/// so enclosures are conservative by monotonicity alone (no rounding).
struct IntervalValue {
    Rational lo;
    Rational hi;

    IntervalValue() : lo(0), hi(0) {}
    IntervalValue(Rational v) : lo(v), hi(std::move(v)) {}
    IntervalValue(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool subset_of(const IntervalValue& o) const { return o.lo <= lo && hi <= o.hi; }

    /// Certified sign: +1 if the whole interval is positive, -1 if negative,
    /// 0 when the interval straddles or touches zero (undecided).
    int certified_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    bool operator==(const IntervalValue& o) const { return lo == o.lo && hi == o.hi; }
};

inline IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) {
    return IntervalValue(a.lo + b.lo, a.hi + b.hi);
}

inline IntervalValue operator-(const IntervalValue& a) {
    return IntervalValue(-a.hi, -a.lo);
}

inline IntervalValue operator-(const IntervalValue& a, const IntervalValue& b) {
    return a + (-b);
}

inline IntervalValue operator*(const IntervalValue& a, const IntervalValue& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return IntervalValue(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline IntervalValue operator*(const IntervalValue& a, const Rational& c) {
    if (sgn(c) >= 0) return IntervalValue(a.lo * c, a.hi * c);
    return IntervalValue(a.hi * c, a.lo * c);
}

inline IntervalValue operator+(const IntervalValue& a, const Rational& c) {
    return IntervalValue(a.lo + c, a.hi + c);
}

/// 1/a for an interval not containing zero.
inline IntervalValue interval_recip(const IntervalValue& a) {
    if (a.contains_zero()) throw std::domain_error("interval reciprocal across zero");
    return IntervalValue(Rational(1) / a.hi, Rational(1) / a.lo);
}

inline IntervalValue operator/(const IntervalValue& a, const IntervalValue& b) {
    return a * interval_recip(b);
}

inline IntervalValue interval_pow(const IntervalValue& a, unsigned long e) {
    IntervalValue r(Rational(1));
    IntervalValue b = a;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

}  // namespace kuc
