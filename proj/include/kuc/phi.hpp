#pragma once

#include "kuc/interval.hpp"
#include "kuc/poly.hpp"
#include "kuc/rational.hpp"

#include <memory>

namespace kuc {

/// x^k + x - 1, the defining polynomial of phi_k.
PolyQ phi_defining_poly(int k);

/// Bisection enclosure of phi_k, the unique root of x^k + x - 1 in (1/2, 1),
/// of width <= eps. Endpoints are dyadic rationals.
IntervalValue refine_phi(int k, const Rational& eps);

/// Context for arithmetic in Q[x]/(x^k + x - 1) with a certified isolating
/// interval for phi_k. Immutable; refinement returns a new context.
class PhiContext {
  public:
    static std::shared_ptr<const PhiContext> create(int k);

    int k() const { return k_; }
    const PolyQ& defining_poly() const { return defining_; }
    const IntervalValue& enclosure() const { return enclosure_; }
    unsigned long precision_bits() const { return precision_bits_; }

    /// New context whose enclosure has width <= 2^-bits.
    std::shared_ptr<const PhiContext> refined(unsigned long bits) const;

    /// psi_k = 1 - phi_k enclosure.
    IntervalValue psi_enclosure() const {
        return IntervalValue(Rational(1) - enclosure_.hi, Rational(1) - enclosure_.lo);
    }

    /// alpha_k = phi_k^{k-1} enclosure.
    IntervalValue alpha_enclosure() const { return interval_pow(enclosure_, static_cast<unsigned long>(k_ - 1)); }

  private:
    PhiContext(int k, IntervalValue enc, unsigned long bits);

    int k_;
    PolyQ defining_;
    IntervalValue enclosure_;
    unsigned long precision_bits_;
};

using PhiContextPtr = std::shared_ptr<const PhiContext>;

}  // namespace kuc
