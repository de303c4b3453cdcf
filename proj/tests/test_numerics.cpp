#include "doctest.h"

#include "kuc/algebraic.hpp"
#include "kuc/interval.hpp"
#include "kuc/phi.hpp"
#include "kuc/poly.hpp"
#include "kuc/rational.hpp"

#include <random>

using namespace kuc;

namespace {

Rational dec(const char* s) { return rational_from_string(s); }

bool within(const IntervalValue& box, const Rational& center, const Rational& tol) {
    return abs(box.lo - center) <= tol && abs(box.hi - center) <= tol;
}

}  // namespace

TEST_CASE("refine_phi brackets the golden values") {
    // phi_2 = 0.6180..., phi_3 = 0.6823... to 1e-4
    IntervalValue p2 = refine_phi(2, dec("1/10000"));
    CHECK(p2.width() <= dec("1/10000"));
    CHECK(within(p2, dec("6180/10000"), dec("2/10000")));

    IntervalValue p3 = refine_phi(3, dec("1/10000"));
    CHECK(within(p3, dec("6823/10000"), dec("2/10000")));
}

TEST_CASE("refine_phi with eps=1 returns a sign-changing sub-bracket of [1/2,1]") {
    IntervalValue box = refine_phi(2, Rational(1));
    CHECK(box.lo >= dec("1/2"));
    CHECK(box.hi <= Rational(1));
    PolyQ f = phi_defining_poly(2);
    CHECK(sgn(eval(f, box.lo)) < 0);
    CHECK(sgn(eval(f, box.hi)) > 0);
}

TEST_CASE("refine_phi rejects bad parameters") {
    CHECK_THROWS(refine_phi(1, Rational(1)));
    CHECK_THROWS(refine_phi(3, Rational(0)));
}

TEST_CASE("enclosure invariants") {
    for (int k = 2; k <= 9; ++k) {
        auto ctx = PhiContext::create(k);
        const IntervalValue& box = ctx->enclosure();
        // strictly inside (1/2, k/(k+1))
        CHECK(box.lo > dec("1/2"));
        CHECK(box.hi < make_rational(k, k + 1));
        // defining polynomial straddles zero on the enclosure
        IntervalValue v = eval_interval(ctx->defining_poly(), box);
        CHECK(v.contains_zero());
        // exactly one root inside
        CHECK(sturm_count_q(ctx->defining_poly(), box.lo, box.hi) == 1);
        // psi-side consistency: (1-x)^k - x straddles zero on the psi enclosure
        IntervalValue psi = ctx->psi_enclosure();
        PolyQ f = phi_defining_poly(k);
        // (1-x)^k - x evaluated via interval ops
        IntervalValue one_minus(Rational(1) - psi.hi, Rational(1) - psi.lo);
        IntervalValue w = interval_pow(one_minus, static_cast<unsigned long>(k)) - psi;
        CHECK(w.contains_zero());
    }
}

TEST_CASE("nested refinement") {
    auto ctx = PhiContext::create(4);
    auto fine = ctx->refined(96);
    CHECK(fine->enclosure().subset_of(ctx->enclosure()));
    CHECK(fine->enclosure().width() <= dyadic_eps(96));
}

TEST_CASE("ring arithmetic matches the defining relation") {
    auto c2 = PhiContext::create(2);
    AlgebraicElement phi({Rational(0), Rational(1)}, c2);
    AlgebraicElement sq = phi * phi;  // phi^2 = 1 - phi
    CHECK(sq.coords()[0] == 1);
    CHECK(sq.coords()[1] == -1);

    AlgebraicElement a = AlgebraicElement::from_alpha(Rational(1), Rational(1), c2);   // 1 + phi
    AlgebraicElement b = AlgebraicElement::from_alpha(Rational(2), Rational(-1), c2);  // 2 - phi
    AlgebraicElement s = a + b;
    CHECK(s.coords()[0] == 3);
    CHECK(s.coords()[1] == 0);
}

TEST_CASE("phi^3 * phi^2 reduces like x^5 mod x^4 + x - 1") {
    auto c4 = PhiContext::create(4);
    AlgebraicElement p3({Rational(0), Rational(0), Rational(0), Rational(1)}, c4);
    AlgebraicElement p2({Rational(0), Rational(0), Rational(1), Rational(0)}, c4);
    AlgebraicElement prod = p3 * p2;

    // oracle: remainder of x^5 by x^4 + x - 1 over Q
    PolyQ x5(std::vector<Rational>{0, 0, 0, 0, 0, 1});
    PolyQ rem = divrem_q(x5, phi_defining_poly(4)).rem;
    std::vector<Rational> expect(4, Rational(0));
    for (std::size_t i = 0; i < rem.coeffs.size(); ++i) expect[i] = rem.coeffs[i];
    CHECK(prod.coords() == expect);
    CHECK(prod.coords() == std::vector<Rational>{Rational(0), Rational(1), Rational(-1), Rational(0)});
}

TEST_CASE("context mismatch is rejected") {
    auto c2 = PhiContext::create(2);
    auto c3 = PhiContext::create(3);
    AlgebraicElement a = AlgebraicElement::from_rational(Rational(1), c2);
    AlgebraicElement b = AlgebraicElement::from_rational(Rational(1), c3);
    CHECK_THROWS_AS(a + b, ContextMismatch);
}

TEST_CASE("sign_of on golden elements") {
    auto c3 = PhiContext::create(3);
    // 81*alpha_3 - 27 > 0
    AlgebraicElement e1 = AlgebraicElement::from_alpha(Rational(-27), Rational(81), c3);
    CHECK(sign_of(e1) == 1);

    AlgebraicElement z = AlgebraicElement::from_rational(Rational(0), c3);
    CHECK(sign_of(z) == 0);

    auto c4 = PhiContext::create(4);
    // -11904*alpha_4 + 960 < 0
    AlgebraicElement e2 = AlgebraicElement::from_alpha(Rational(960), Rational(-11904), c4);
    CHECK(sign_of(e2) == -1);
}

TEST_CASE("sign_of detects exact algebraic zeros") {
    // phi^k + phi - 1 = 0 exactly
    for (int k : {2, 3, 5}) {
        auto ctx = PhiContext::create(k);
        AlgebraicElement phi = AlgebraicElement::from_alpha(Rational(0), Rational(1), ctx);
        // build phi from coords directly: phi = x
        std::vector<Rational> cs(static_cast<std::size_t>(k), Rational(0));
        cs[1] = 1;
        AlgebraicElement x(cs, ctx);
        AlgebraicElement acc = AlgebraicElement::from_rational(Rational(1), ctx);
        for (int i = 0; i < k; ++i) acc = acc * x;
        AlgebraicElement val = acc + x - AlgebraicElement::from_rational(Rational(1), ctx);
        CHECK(sign_of(val) == 0);
        (void)phi;
    }
    // for k = 5, x^5 + x - 1 = (x^2 - x + 1)(x^3 + x^2 - 1): the quadratic
    // factor is nonzero at phi_5 even though it divides the modulus
    auto c5 = PhiContext::create(5);
    AlgebraicElement q({Rational(1), Rational(-1), Rational(1), Rational(0), Rational(0)}, c5);
    CHECK(sign_of(q) == 1);
    // and the cubic factor vanishes at phi_5
    AlgebraicElement cubic({Rational(-1), Rational(0), Rational(1), Rational(1), Rational(0)}, c5);
    CHECK(sign_of(cubic) == 0);
}

TEST_CASE("sign multiplicativity and additivity properties") {
    std::mt19937_64 rng(20240817);
    auto c4 = PhiContext::create(4);
    auto rand_elem = [&]() {
        std::vector<Rational> cs(4);
        for (auto& c : cs) c = make_rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 7));
        return AlgebraicElement(std::move(cs), c4);
    };
    for (int i = 0; i < 40; ++i) {
        AlgebraicElement a = rand_elem(), b = rand_elem();
        CHECK(sign_of(a * b) == sign_of(a) * sign_of(b));
        if (sign_of(a) == sign_of(b) && sign_of(a) != 0) {
            CHECK(sign_of(a + b) == sign_of(a));
        }
    }
}

TEST_CASE("rational round-trip through the ring") {
    auto c6 = PhiContext::create(6);
    Rational v = dec("-355/113");
    AlgebraicElement e = AlgebraicElement::from_rational(v, c6);
    CHECK(e.rational_value() == v);
    CHECK(sign_of(e) == -1);
}

TEST_CASE("decimal serialization") {
    CHECK(to_decimal_string(dec("1/3"), 6) == "0.333333");
    CHECK(to_decimal_string(dec("-1/3"), 4) == "-0.3333");
    CHECK(to_decimal_string(dec("1/2"), 1) == "0.5");
    CHECK(to_decimal_string(dec("2/3"), 4) == "0.6667");
    CHECK(to_decimal_string(Rational(5), 2) == "5.00");
    CHECK(to_decimal_string(dec("-7/200"), 3) == "-0.035");
}
