#include "kuc/phi.hpp"

#include <stdexcept>

namespace kuc {

PolyQ phi_defining_poly(int k) {
    if (k < 2) throw std::invalid_argument("phi_k requires k >= 2");
    std::vector<Rational> cs(static_cast<std::size_t>(k) + 1, Rational(0));
    cs[0] = -1;
    cs[1] = 1;
    cs[static_cast<std::size_t>(k)] = 1;
    return PolyQ(std::move(cs));
}

namespace {

IntervalValue bisect_phi(const PolyQ& f, IntervalValue box, const Rational& eps) {
    // invariant: f(lo) < 0 < f(hi)
    while (box.width() > eps) {
        Rational mid = box.midpoint();
        int s = sgn(eval(f, mid));
        if (s == 0) {
            box = IntervalValue(mid, mid);
            break;
        }
        if (s < 0)
            box = IntervalValue(mid, box.hi);
        else
            box = IntervalValue(box.lo, mid);
    }
    return box;
}

}  // namespace

IntervalValue refine_phi(int k, const Rational& eps) {
    if (sgn(eps) <= 0) throw std::invalid_argument("refine_phi requires eps > 0");
    PolyQ f = phi_defining_poly(k);
    IntervalValue box(make_rational(1, 2), Rational(1));
    // sign change over the initial bracket: 2^-k - 1/2 < 0, f(1) = 1 > 0
    return bisect_phi(f, box, eps);
}

PhiContext::PhiContext(int k, IntervalValue enc, unsigned long bits)
    : k_(k), defining_(phi_defining_poly(k)), enclosure_(std::move(enc)), precision_bits_(bits) {}

std::shared_ptr<const PhiContext> PhiContext::create(int k) {
    const unsigned long start_bits = 32;
    IntervalValue enc = refine_phi(k, dyadic_eps(start_bits));
    return std::shared_ptr<const PhiContext>(new PhiContext(k, std::move(enc), start_bits));
}

std::shared_ptr<const PhiContext> PhiContext::refined(unsigned long bits) const {
    if (bits <= precision_bits_) return std::shared_ptr<const PhiContext>(new PhiContext(*this));
    IntervalValue enc = bisect_phi(defining_, enclosure_, dyadic_eps(bits));
    return std::shared_ptr<const PhiContext>(new PhiContext(k_, std::move(enc), bits));
}

}  // namespace kuc
