#pragma once

#include "kuc/phi.hpp"
#include "kuc/poly.hpp"
#include "kuc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kuc {

struct ContextMismatch : std::invalid_argument {
    ContextMismatch() : std::invalid_argument("algebraic elements from different contexts") {}
};

/// Element of Q[x]/(x^k + x - 1), i.e. c0 + c1*phi + ... + c_{k-1}*phi^{k-1}.
/// A context-free element (scalar) holds a single rational and promotes to
/// any context on contact; this lets AlgebraicElement satisfy the generic
/// polynomial coefficient interface (literals like C(0), C(3)).
class AlgebraicElement {
  public:
    AlgebraicElement() : coords_(1, Rational(0)) {}
    AlgebraicElement(long v) : coords_(1, Rational(v)) {}
    explicit AlgebraicElement(Rational v) : coords_(1, std::move(v)) {}

    /// Element with explicit coordinates; coords.size() must equal ctx->k().
    AlgebraicElement(std::vector<Rational> coords, PhiContextPtr ctx);

    /// a + b*alpha_k where alpha_k = phi^{k-1}.
    static AlgebraicElement from_alpha(const Rational& a, const Rational& b, const PhiContextPtr& ctx);

    /// Rational constant embedded in a context.
    static AlgebraicElement from_rational(const Rational& v, const PhiContextPtr& ctx);

    bool is_scalar() const { return ctx_ == nullptr; }
    const PhiContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coords() const { return coords_; }

    /// All coordinates zero (structural zero; implies value zero).
    bool structurally_zero() const;

    /// The element as a rational polynomial in phi of degree < k.
    PolyQ as_poly() const { return PolyQ(coords_); }

    /// Exact rational value when the element is a rational constant
    /// (all phi-coordinates above degree 0 vanish); throws otherwise.
    Rational rational_value() const;

    AlgebraicElement operator-() const;
    AlgebraicElement& operator+=(const AlgebraicElement& o);
    AlgebraicElement& operator-=(const AlgebraicElement& o);
    AlgebraicElement& operator*=(const AlgebraicElement& o);

    friend AlgebraicElement operator+(AlgebraicElement a, const AlgebraicElement& b) { return a += b; }
    friend AlgebraicElement operator-(AlgebraicElement a, const AlgebraicElement& b) { return a -= b; }
    friend AlgebraicElement operator*(AlgebraicElement a, const AlgebraicElement& b) { return a *= b; }

    bool operator==(const AlgebraicElement& o) const;
    bool operator!=(const AlgebraicElement& o) const { return !(*this == o); }

    /// Enclosure of the real value at phi_k, evaluated on the given
    /// (or the context's current) isolating interval.
    IntervalValue enclosure(const IntervalValue& phi_box) const;

    std::string to_string() const;

  private:
    // size k with ctx, or size 1 without (scalar)
    std::vector<Rational> coords_;
    PhiContextPtr ctx_;

    static void promote(AlgebraicElement& a, const AlgebraicElement& b);
};

/// Sign of the real number a(phi_k) in {-1, 0, +1}. The zero test is exact:
/// gcd(a, x^k + x - 1) over Q followed by a Sturm count on the isolating
/// interval. Nonzero values are resolved by doubling the enclosure precision
/// until the interval evaluation excludes zero.
int sign_of(const AlgebraicElement& a);

inline AlgebraicElement alg_add(const AlgebraicElement& a, const AlgebraicElement& b) { return a + b; }
inline AlgebraicElement alg_mul(const AlgebraicElement& a, const AlgebraicElement& b) { return a * b; }
inline AlgebraicElement alg_neg(const AlgebraicElement& a) { return -a; }

AlgebraicElement alg_pow(const AlgebraicElement& a, unsigned long e);

/// Exact quotient num/den in the ring when one exists (solves the k x k
/// linear system of the multiplication-by-den map); nullopt otherwise.
/// Used for subresultant normalization, never exposed as ring division.
std::optional<AlgebraicElement> try_exact_divide(const AlgebraicElement& num, const AlgebraicElement& den);

}  // namespace kuc
