#pragma once

#include "kuc/algebraic.hpp"
#include "kuc/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kuc {

using PolyA = Poly<AlgebraicElement>;

struct EndpointRootError : std::runtime_error {
    EndpointRootError() : std::runtime_error("interval endpoint is a root and perturbation failed") {}
};

/// Open interval with optional (= unbounded) rational endpoints.
struct RootInterval {
    std::optional<Rational> lo;  // nullopt: -infinity
    std::optional<Rational> hi;  // nullopt: +infinity

    static RootInterval whole() { return {std::nullopt, std::nullopt}; }
    static RootInterval open(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
    static RootInterval above(Rational a) { return {std::move(a), std::nullopt}; }
    static RootInterval below(Rational b) { return {std::nullopt, std::move(b)}; }
};

/// Signed pseudo-remainder chain (Sturm-Habicht style), normalized so the
/// evaluation at phi_k of every element is a positive multiple of the classic
/// signed remainder sequence of (p, p'). Endpoint sign-variation differences
/// therefore count distinct real roots of the evaluated polynomial.
struct SturmChain {
    std::vector<PolyA> seq;

    /// Last element of degree >= 1 means gcd(p, p') is nonconstant
    /// (multiple roots); the element is that gcd up to a positive factor.
    bool has_nontrivial_gcd() const { return !seq.empty() && seq.back().degree() >= 1; }
};

/// Drop leading coefficients that vanish at phi_k (sign_of == 0) so the
/// structural degree equals the degree of the evaluated real polynomial.
PolyA ev_trimmed(PolyA p);

/// Divide by the positive rational content (common integer factor after
/// clearing denominators); keeps chain coefficients primitive.
PolyA strip_content(PolyA p);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b; pure ring ops.
PolyA prem(const PolyA& a, const PolyA& b);

SturmChain sturm_chain(const PolyA& p);

/// Sign of p(x) at phi_k for rational x.
int sign_at(const PolyA& p, const Rational& x);

/// Evaluate at a rational point (exact Horner in the ring).
AlgebraicElement eval_at(const PolyA& p, const Rational& x);

/// (distinct, with_multiplicity) real-root counts of the evaluated
/// polynomial in the open interval. Root endpoints are perturbed by a
/// verified root-free margin; EndpointRootError if that fails.
std::pair<long, long> count_roots(const PolyA& p, const RootInterval& interval);

/// Disjoint rational enclosures of width <= eps, one per distinct real root
/// in the interval. A degenerate [r, r] enclosure marks an exact rational root.
std::vector<IntervalValue> isolate_roots(const PolyA& p, const RootInterval& interval, const Rational& eps);

/// Upper bound U such that all real roots of the evaluated polynomial lie
/// in (-U, U) (Cauchy bound from certified coefficient enclosures).
Rational root_magnitude_bound(const PolyA& p);

}  // namespace kuc
