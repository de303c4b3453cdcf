#include "kuc/sturm.hpp"

#include <algorithm>
#include <cassert>

namespace kuc {

namespace {

PhiContextPtr context_of(const PolyA& p) {
    for (const auto& c : p.coeffs)
        if (c.context()) return c.context();
    return nullptr;
}

}  // namespace

PolyA ev_trimmed(PolyA p) {
    while (!p.coeffs.empty() && sign_of(p.coeffs.back()) == 0) p.coeffs.pop_back();
    return p;
}

PolyA strip_content(PolyA p) {
    if (p.is_zero()) return p;
    Integer den_lcm(1);
    for (const auto& c : p.coeffs)
        for (const auto& q : c.coords()) {
            if (q == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
    Integer num_gcd(0);
    for (const auto& c : p.coeffs)
        for (const auto& q : c.coords()) {
            if (q == 0) continue;
            Integer scaled = q.get_num() * (den_lcm / q.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    if (num_gcd == 0) return p;  // structurally zero coefficients only
    Rational factor = make_rational(den_lcm, num_gcd);
    if (factor == 1) return p;
    AlgebraicElement f{factor};
    for (auto& c : p.coeffs) c *= f;
    return p;
}

PolyA prem(const PolyA& a, const PolyA& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
    const AlgebraicElement lb = b.leading();
    const long db = b.degree();
    PolyA r = a;
    long steps = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        AlgebraicElement la = r.leading();
        long sh = r.degree() - db;
        r = r * lb - shift_up(b, static_cast<std::size_t>(sh)) * la;
        --steps;
    }
    while (steps-- > 0) r = r * lb;
    return r;
}

namespace {

// Divide every coefficient exactly by d; nullopt if any quotient fails.
std::optional<PolyA> try_divide_poly(const PolyA& p, const AlgebraicElement& d) {
    std::vector<AlgebraicElement> out;
    out.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
        auto q = try_exact_divide(c, d);
        if (!q) return std::nullopt;
        out.push_back(std::move(*q));
    }
    return PolyA(std::move(out));
}

}  // namespace

SturmChain sturm_chain(const PolyA& p) {
    if (p.is_zero()) throw std::domain_error("sturm chain of zero polynomial");
    SturmChain chain;
    PolyA first = strip_content(ev_trimmed(p));
    if (first.is_zero()) throw std::domain_error("sturm chain of a polynomial vanishing at phi");
    chain.seq.push_back(first);
    if (first.degree() < 1) return chain;
    PolyA d = strip_content(derivative(first));  // lc scales by the degree, stays nonzero at phi
    chain.seq.push_back(d);

    // Subresultant-normalized signed chain. Each pseudo-remainder is divided
    // by the Brown g*h^delta factor (exact over a domain; a failed division
    // in a reducible quotient ring just skips the normalization for that
    // step), then sign-corrected so every stored element evaluates at phi to
    // a positive multiple of the classic signed remainder sequence.
    AlgebraicElement g{Rational(1)};
    AlgebraicElement h{Rational(1)};
    while (chain.seq.back().degree() >= 1) {
        const PolyA& A = chain.seq[chain.seq.size() - 2];
        const PolyA& B = chain.seq.back();
        long delta = A.degree() - B.degree();
        PolyA R = ev_trimmed(prem(A, B));
        if (R.is_zero()) break;  // B is (a positive multiple of) gcd(p, p') at phi

        AlgebraicElement divisor = g * alg_pow(h, static_cast<unsigned long>(delta));
        int sdiv = 1;
        if (auto q = try_divide_poly(R, divisor)) {
            sdiv = sign_of(divisor);
            assert(sdiv != 0);
            R = ev_trimmed(std::move(*q));
        }
        int slc = sign_of(B.leading());
        assert(slc != 0);
        // ev(stored prem / divisor) = slc^{delta+1} * sdiv * |positive| * rem
        int msign = (((delta + 1) % 2 == 1) ? slc : 1) * sdiv;
        PolyA next = (msign > 0) ? -R : std::move(R);
        next = strip_content(std::move(next));

        g = B.leading();
        if (delta >= 1) {
            AlgebraicElement gp = alg_pow(g, static_cast<unsigned long>(delta));
            if (delta == 1) {
                h = gp;
            } else {
                auto q = try_exact_divide(gp, alg_pow(h, static_cast<unsigned long>(delta - 1)));
                h = q ? std::move(*q) : gp;
            }
        }
        chain.seq.push_back(std::move(next));
    }
    return chain;
}

AlgebraicElement eval_at(const PolyA& p, const Rational& x) {
    PhiContextPtr ctx = context_of(p);
    AlgebraicElement pt = ctx ? AlgebraicElement::from_rational(x, ctx) : AlgebraicElement(x);
    return eval(p, pt);
}

int sign_at(const PolyA& p, const Rational& x) { return sign_of(eval_at(p, x)); }

namespace {

int variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

struct ChainSigns {
    const SturmChain& chain;

    int var_at(const Rational& x) const {
        std::vector<int> signs;
        signs.reserve(chain.seq.size());
        for (const auto& q : chain.seq) signs.push_back(sign_at(q, x));
        return variations(signs);
    }
    int var_pos_inf() const {
        std::vector<int> signs;
        for (const auto& q : chain.seq) signs.push_back(q.is_zero() ? 0 : sign_of(q.leading()));
        return variations(signs);
    }
    int var_neg_inf() const {
        std::vector<int> signs;
        for (const auto& q : chain.seq) {
            if (q.is_zero()) {
                signs.push_back(0);
                continue;
            }
            int s = sign_of(q.leading());
            if (q.degree() % 2 == 1) s = -s;
            signs.push_back(s);
        }
        return variations(signs);
    }
};

// Nudge a root endpoint by a margin certified to contain no other root:
// the count over (a - d, a + d) must be exactly 1, namely a itself.
Rational perturb_root_endpoint(const PolyA& p, const ChainSigns& cs, const Rational& a, bool upward) {
    for (unsigned long bits = 20; bits <= 80; bits += 12) {
        Rational d = dyadic_eps(bits);
        Rational lo = a - d, hi = a + d;
        if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0) continue;
        if (cs.var_at(lo) - cs.var_at(hi) != 1) continue;
        return upward ? hi : lo;
    }
    throw EndpointRootError();
}

}  // namespace

Rational root_magnitude_bound(const PolyA& p) {
    PolyA q = ev_trimmed(p);
    if (q.degree() < 1) return Rational(1);
    PhiContextPtr ctx = context_of(q);
    IntervalValue box = ctx ? ctx->enclosure() : IntervalValue(Rational(1));
    PhiContextPtr refined = ctx;
    while (ctx) {
        IntervalValue lead = q.leading().enclosure(box);
        if (!lead.contains_zero()) break;
        refined = refined->refined(refined->precision_bits() * 2);
        box = refined->enclosure();
    }
    IntervalValue lead = q.leading().enclosure(box);
    Rational lead_min = std::min(abs(lead.lo), abs(lead.hi));
    Rational max_ratio(0);
    for (std::size_t i = 0; i + 1 < q.coeffs.size(); ++i) {
        IntervalValue ci = q.coeffs[i].enclosure(box);
        Rational m = std::max(abs(ci.lo), abs(ci.hi)) / lead_min;
        max_ratio = std::max(max_ratio, m);
    }
    return Rational(2) + max_ratio;  // Cauchy bound plus slack, strictly beyond any root
}

std::pair<long, long> count_roots(const PolyA& p, const RootInterval& interval) {
    PolyA q = ev_trimmed(p);
    if (q.is_zero()) throw std::domain_error("root count of a polynomial vanishing identically at phi");
    if (q.degree() < 1) return {0, 0};

    SturmChain chain = sturm_chain(q);
    ChainSigns cs{chain};

    int vlo, vhi;
    if (interval.lo) {
        Rational a = *interval.lo;
        if (sign_at(q, a) == 0) a = perturb_root_endpoint(q, cs, a, /*upward=*/true);
        vlo = cs.var_at(a);
    } else {
        vlo = cs.var_neg_inf();
    }
    if (interval.hi) {
        Rational b = *interval.hi;
        if (sign_at(q, b) == 0) b = perturb_root_endpoint(q, cs, b, /*upward=*/false);
        vhi = cs.var_at(b);
    } else {
        vhi = cs.var_pos_inf();
    }

    long distinct = vlo - vhi;
    long with_mult = distinct;
    if (chain.has_nontrivial_gcd()) {
        with_mult += count_roots(chain.seq.back(), interval).second;
    }
    return {distinct, with_mult};
}

std::vector<IntervalValue> isolate_roots(const PolyA& p, const RootInterval& interval, const Rational& eps) {
    if (sgn(eps) <= 0) throw std::invalid_argument("isolate_roots requires eps > 0");
    PolyA q = ev_trimmed(p);
    if (q.is_zero()) throw std::domain_error("isolate_roots of a polynomial vanishing identically at phi");
    std::vector<IntervalValue> out;
    if (q.degree() < 1) return out;

    SturmChain chain = sturm_chain(q);
    ChainSigns cs{chain};

    Rational bound = root_magnitude_bound(q);
    Rational a = interval.lo ? *interval.lo : -bound;
    Rational b = interval.hi ? *interval.hi : bound;
    if (a >= b) return out;
    if (sign_at(q, a) == 0) a = perturb_root_endpoint(q, cs, a, true);
    if (sign_at(q, b) == 0) b = perturb_root_endpoint(q, cs, b, false);
    if (a >= b) return out;

    struct Seg {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Seg> stack{{a, b, cs.var_at(a), cs.var_at(b)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int count = s.vlo - s.vhi;
        if (count <= 0) continue;
        if (count == 1 && s.hi - s.lo <= eps) {
            out.push_back(IntervalValue(s.lo, s.hi));
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (sign_at(q, mid) == 0) {
            out.push_back(IntervalValue(mid, mid));  // exact rational root
            Rational lo2 = perturb_root_endpoint(q, cs, mid, false);
            Rational hi2 = perturb_root_endpoint(q, cs, mid, true);
            stack.push_back({s.lo, lo2, s.vlo, cs.var_at(lo2)});
            stack.push_back({hi2, s.hi, cs.var_at(hi2), s.vhi});
            continue;
        }
        int vm = cs.var_at(mid);
        stack.push_back({s.lo, mid, s.vlo, vm});
        stack.push_back({mid, s.hi, vm, s.vhi});
    }
    std::sort(out.begin(), out.end(), [](const IntervalValue& x, const IntervalValue& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace kuc
