#include "kuc/poly.hpp"

#include <sstream>

namespace kuc {

DivRem divrem_q(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyQ rem = a;
    std::vector<Rational> quot;
    long db = b.degree();
    if (rem.degree() >= db) quot.assign(rem.degree() - db + 1, Rational(0));
    const Rational& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        long shift = rem.degree() - db;
        Rational factor = rem.leading() / lead;
        quot[shift] = factor;
        std::vector<Rational> next = rem.coeffs;
        for (long i = 0; i <= db; ++i) next[i + shift] -= factor * b.coeffs[i];
        next.pop_back();  // leading term cancels exactly
        rem = PolyQ(std::move(next));
    }
    return DivRem{PolyQ(std::move(quot)), std::move(rem)};
}

PolyQ gcd_q(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a, y = b;
    while (!y.is_zero()) {
        PolyQ r = divrem_q(x, y).rem;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    Rational inv_lead = Rational(1) / x.leading();
    return x * inv_lead;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int var = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count_q(const PolyQ& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::domain_error("sturm count of the zero polynomial");
    if (lo > hi) throw std::invalid_argument("sturm count over empty interval");
    std::vector<PolyQ> chain;
    chain.push_back(p);
    PolyQ d = derivative(p);
    if (!d.is_zero()) {
        chain.push_back(d);
        while (chain.back().degree() >= 1) {
            PolyQ r = divrem_q(chain[chain.size() - 2], chain.back()).rem;
            if (r.is_zero()) break;
            chain.push_back(-r);
        }
    }
    std::vector<int> at_lo, at_hi;
    at_lo.reserve(chain.size());
    at_hi.reserve(chain.size());
    for (const auto& q : chain) {
        at_lo.push_back(sgn(eval(q, lo)));
        at_hi.push_back(sgn(eval(q, hi)));
    }
    if (at_lo[0] == 0 || at_hi[0] == 0)
        throw std::invalid_argument("sturm count with a root at an endpoint");
    return sign_variations(at_lo) - sign_variations(at_hi);
}

std::string poly_to_string(const PolyQ& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        const Rational& c = p.coeffs[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace kuc
