#pragma once

#include "kuc/interval.hpp"
#include "kuc/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kuc {

/// Dense univariate polynomial over a coefficient ring C.
/// coeffs[i] is the coefficient of x^i; structurally-zero leading
/// coefficients are trimmed, the zero polynomial has no coefficients.
template <typename C>
struct Poly {
    std::vector<C> coeffs;

    Poly() = default;
    Poly(long v) {
        if (C(v) != C(0)) coeffs.push_back(C(v));
    }
    explicit Poly(std::vector<C> cs) : coeffs(std::move(cs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }

    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    const C& leading() const {
        if (coeffs.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs.back();
    }

    const C& coeff_or_zero(std::size_t i, const C& zero_value) const {
        static_assert(sizeof(C) > 0, "");
        if (i < coeffs.size()) return coeffs[i];
        return zero_value;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == C(0)) coeffs.pop_back();
    }

    bool operator==(const Poly& o) const { return coeffs == o.coeffs; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
};

template <typename C>
Poly<C> operator+(const Poly<C>& a, const Poly<C>& b) {
    std::vector<C> out(std::max(a.coeffs.size(), b.coeffs.size()), C(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
    return Poly<C>(std::move(out));
}

template <typename C>
Poly<C> operator-(const Poly<C>& a) {
    std::vector<C> out = a.coeffs;
    for (auto& c : out) c = -c;
    return Poly<C>(std::move(out));
}

template <typename C>
Poly<C> operator-(const Poly<C>& a, const Poly<C>& b) {
    return a + (-b);
}

template <typename C>
Poly<C> operator*(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<C>();
    std::vector<C> out(a.coeffs.size() + b.coeffs.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] += a.coeffs[i] * b.coeffs[j];
    return Poly<C>(std::move(out));
}

template <typename C>
Poly<C> operator*(const Poly<C>& a, const C& c) {
    std::vector<C> out = a.coeffs;
    for (auto& x : out) x *= c;
    return Poly<C>(std::move(out));
}

template <typename C>
Poly<C>& Poly<C>::operator+=(const Poly& o) {
    *this = *this + o;
    return *this;
}

template <typename C>
Poly<C>& Poly<C>::operator-=(const Poly& o) {
    *this = *this - o;
    return *this;
}

template <typename C>
Poly<C>& Poly<C>::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

/// a * x^j
template <typename C>
Poly<C> shift_up(const Poly<C>& a, std::size_t j) {
    if (a.is_zero()) return a;
    std::vector<C> out(a.coeffs.size() + j, C(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i + j] = a.coeffs[i];
    return Poly<C>(std::move(out));
}

template <typename C>
Poly<C> poly_pow(const Poly<C>& a, unsigned long e) {
    Poly<C> r = Poly<C>::constant(C(1));
    Poly<C> b = a;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

/// Formal derivative; degree drops by exactly one for nonconstant input.
template <typename C>
Poly<C> derivative(const Poly<C>& p) {
    if (p.coeffs.size() <= 1) return Poly<C>();
    std::vector<C> out(p.coeffs.size() - 1, C(0));
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) out[i - 1] = p.coeffs[i] * C(static_cast<long>(i));
    return Poly<C>(std::move(out));
}

/// Horner evaluation at a point of the coefficient ring.
template <typename C>
C eval(const Poly<C>& p, const C& x) {
    if (p.is_zero()) return C(0);
    C acc = p.coeffs.back();
    for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) {
        acc = acc * x + p.coeffs[i];
    }
    return acc;
}

using PolyQ = Poly<Rational>;

/// Interval Horner: encloses p([x]) for rational-coefficient p.
inline IntervalValue eval_interval(const PolyQ& p, const IntervalValue& x) {
    IntervalValue acc(Rational(0));
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        acc = acc * x + p.coeffs[i];
    }
    return acc;
}

// ---- exact division machinery over Q ----

struct DivRem {
    PolyQ quot;
    PolyQ rem;
};

DivRem divrem_q(const PolyQ& a, const PolyQ& b);

/// Monic gcd over Q (Euclid with exact field division).
PolyQ gcd_q(const PolyQ& a, const PolyQ& b);

/// Number of distinct real roots of a rational polynomial in the open
/// interval (lo, hi); endpoints must not be roots. Classic Sturm over Q.
int sturm_count_q(const PolyQ& p, const Rational& lo, const Rational& hi);

std::string poly_to_string(const PolyQ& p, const std::string& var = "x");

}  // namespace kuc
