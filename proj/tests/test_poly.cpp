#include "doctest.h"

#include "kuc/resultant.hpp"
#include "kuc/sturm.hpp"
#include "oracles.hpp"

#include <random>

using namespace kuc;

namespace {

Rational dec(const char* s) { return rational_from_string(s); }

PolyA rational_poly(std::vector<Rational> cs, const PhiContextPtr& ctx) {
    std::vector<AlgebraicElement> out;
    out.reserve(cs.size());
    for (auto& c : cs) out.push_back(AlgebraicElement::from_rational(c, ctx));
    return PolyA(std::move(out));
}

/// The k=2 family polynomial (-4a+2) + 3x - 4a x^2 - x^3 with a = alpha_2.
PolyA golden_p2(const PhiContextPtr& c2) {
    std::vector<AlgebraicElement> cs;
    cs.push_back(AlgebraicElement::from_alpha(Rational(2), Rational(-4), c2));
    cs.push_back(AlgebraicElement::from_alpha(Rational(3), Rational(0), c2));
    cs.push_back(AlgebraicElement::from_alpha(Rational(0), Rational(-4), c2));
    cs.push_back(AlgebraicElement::from_alpha(Rational(-1), Rational(0), c2));
    return PolyA(std::move(cs));
}

}  // namespace

TEST_CASE("derivative basics") {
    auto c2 = PhiContext::create(2);
    PolyA x3 = rational_poly({Rational(0), Rational(0), Rational(0), Rational(1)}, c2);
    PolyA d = derivative(x3);
    CHECK(d.degree() == 2);
    CHECK(d.coeffs[2] == AlgebraicElement::from_rational(Rational(3), c2));

    // derivative of p_2 is 3 - 8a x - 3x^2
    PolyA dp2 = derivative(golden_p2(c2));
    CHECK(dp2.degree() == 2);
    CHECK(dp2.coeffs[0] == AlgebraicElement::from_alpha(Rational(3), Rational(0), c2));
    CHECK(dp2.coeffs[1] == AlgebraicElement::from_alpha(Rational(0), Rational(-8), c2));
    CHECK(dp2.coeffs[2] == AlgebraicElement::from_alpha(Rational(-3), Rational(0), c2));
}

TEST_CASE("eval is exact Horner") {
    auto c3 = PhiContext::create(3);
    PolyA zero;
    CHECK(eval_at(zero, dec("7/3")).structurally_zero());

    // (x - 1/2)(x + 2) = x^2 + 3/2 x - 1
    PolyA p = rational_poly({Rational(-1), dec("3/2"), Rational(1)}, c3);
    CHECK(eval_at(p, dec("1/2")).structurally_zero());
    CHECK(sign_of(eval_at(p, Rational(1))) == 1);
}

TEST_CASE("sturm chain counts roots of x^2 - 2") {
    auto c2 = PhiContext::create(2);
    PolyA p = rational_poly({Rational(-2), Rational(0), Rational(1)}, c2);
    auto counts = count_roots(p, RootInterval::open(Rational(0), Rational(2)));
    CHECK(counts.first == 1);
    CHECK(counts.second == 1);
    auto whole = count_roots(p, RootInterval::whole());
    CHECK(whole.first == 2);
    CHECK(whole.second == 2);
}

TEST_CASE("p_2 has exactly two distinct roots in (0,1)") {
    auto c2 = PhiContext::create(2);
    auto counts = count_roots(golden_p2(c2), RootInterval::open(Rational(0), Rational(1)));
    CHECK(counts.first == 2);
    CHECK(counts.second == 2);
}

TEST_CASE("double root detected via vanishing final remainder") {
    auto c2 = PhiContext::create(2);
    // (x - 1/2)^2
    PolyA p = rational_poly({dec("1/4"), Rational(-1), Rational(1)}, c2);
    SturmChain chain = sturm_chain(p);
    CHECK(chain.has_nontrivial_gcd());
    auto counts = count_roots(p, RootInterval::open(Rational(0), Rational(1)));
    CHECK(counts.first == 1);
    CHECK(counts.second == 2);
}

TEST_CASE("no real roots of x^2 + 1") {
    auto c2 = PhiContext::create(2);
    PolyA p = rational_poly({Rational(1), Rational(0), Rational(1)}, c2);
    auto counts = count_roots(p, RootInterval::whole());
    CHECK(counts.first == 0);
    CHECK(counts.second == 0);
}

TEST_CASE("endpoint roots are perturbed away") {
    auto c2 = PhiContext::create(2);
    // (x - 1/4)(x - 3/4): count over (1/4, 1) must see only 3/4
    PolyA p = rational_poly({dec("3/16"), Rational(-1), Rational(1)}, c2);
    auto counts = count_roots(p, RootInterval::open(dec("1/4"), Rational(1)));
    CHECK(counts.first == 1);
    CHECK(counts.second == 1);
}

TEST_CASE("multiplicity accounting on stacked factors") {
    auto c2 = PhiContext::create(2);
    // (x - 1/3)^3 (x + 1)^2: distinct 2, with multiplicity 5 over R
    PolyQ f1(std::vector<Rational>{dec("-1/3"), Rational(1)});
    PolyQ f2(std::vector<Rational>{Rational(1), Rational(1)});
    PolyQ prod = f1 * f1 * f1 * f2 * f2;
    PolyA p = rational_poly(prod.coeffs, c2);
    auto counts = count_roots(p, RootInterval::whole());
    CHECK(counts.first == 2);
    CHECK(counts.second == 5);
    CHECK(counts.second <= p.degree());
}

TEST_CASE("higher multiplicities resolve through the gcd tail") {
    auto c2 = PhiContext::create(2);
    // (x - 1/2)^4: one distinct root of multiplicity 4
    PolyQ lin(std::vector<Rational>{dec("-1/2"), Rational(1)});
    PolyQ quartic = lin * lin * lin * lin;
    PolyA p = rational_poly(quartic.coeffs, c2);
    auto counts = count_roots(p, RootInterval::whole());
    CHECK(counts.first == 1);
    CHECK(counts.second == 4);
    // multiplicity never exceeds degree on random products
    PolyQ f2(std::vector<Rational>{Rational(3), Rational(1)});
    PolyQ mix = quartic * f2;
    auto mixed = count_roots(rational_poly(mix.coeffs, c2), RootInterval::whole());
    CHECK(mixed.first == 2);
    CHECK(mixed.second == 5);
}

TEST_CASE("an algebraic double root at phi itself") {
    auto c2 = PhiContext::create(2);
    // (x - phi)^2 = x^2 - 2 phi x + phi^2, with phi^2 = 1 - phi
    AlgebraicElement phi = AlgebraicElement::from_alpha(Rational(0), Rational(1), c2);
    AlgebraicElement phi2 = phi * phi;
    PolyA p(std::vector<AlgebraicElement>{phi2, AlgebraicElement(Rational(-2)) * phi,
                                          AlgebraicElement::from_rational(Rational(1), c2)});
    auto counts = count_roots(p, RootInterval::open(Rational(0), Rational(1)));
    CHECK(counts.first == 1);
    CHECK(counts.second == 2);
    CHECK(sign_of(discriminant(p)) == 0);
    auto roots = isolate_roots(p, RootInterval::open(Rational(0), Rational(1)), dec("1/1024"));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].width() <= dec("1/1024"));
    // the enclosure must contain phi's own enclosure midpoint
    CHECK(roots[0].contains(refine_phi(2, dec("1/100000000000")).midpoint()));
}

TEST_CASE("sturm counts match the classic rational sturm and grid oracles") {
    std::mt19937_64 rng(424242);
    auto c2 = PhiContext::create(2);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int deg = 2 + static_cast<int>(rng() % 5);
        std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1);
        for (auto& c : cs) c = make_rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
        PolyQ q(cs);
        if (q.degree() < 1) continue;
        Rational lo(-3), hi(3);
        if (eval(q, lo) == 0 || eval(q, hi) == 0) continue;
        int expected = sturm_count_q(q, lo, hi);
        auto counts = count_roots(rational_poly(q.coeffs, c2), RootInterval::open(lo, hi));
        CHECK(counts.first == expected);
        CHECK(counts.first >= oracle::grid_sign_changes(q, lo, hi, 2000));
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("Rolle consistency: derivative loses at most one root") {
    std::mt19937_64 rng(777);
    auto c2 = PhiContext::create(2);
    for (int trial = 0; trial < 25; ++trial) {
        int deg = 3 + static_cast<int>(rng() % 4);
        std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1);
        for (auto& c : cs) c = make_rational(static_cast<long>(rng() % 11) - 5, 1);
        PolyA p = rational_poly(cs, c2);
        if (ev_trimmed(p).degree() < 2) continue;
        long np = count_roots(p, RootInterval::whole()).first;
        long nd = count_roots(derivative(p), RootInterval::whole()).first;
        CHECK(nd >= np - 1);
    }
}

TEST_CASE("isolate_roots encloses both roots of (x-1/4)(x-3/4)") {
    auto c2 = PhiContext::create(2);
    PolyA p = rational_poly({dec("3/16"), Rational(-1), Rational(1)}, c2);
    auto roots = isolate_roots(p, RootInterval::open(Rational(0), Rational(1)), dec("1/64"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].contains(dec("1/4")));
    CHECK(roots[1].contains(dec("3/4")));
    CHECK(roots[0].width() <= dec("1/64"));
}

TEST_CASE("isolate_roots over the whole line uses the magnitude bound") {
    auto c2 = PhiContext::create(2);
    // roots at -5, 1/3, 4
    PolyQ f1(std::vector<Rational>{Rational(5), Rational(1)});
    PolyQ f2(std::vector<Rational>{dec("-1/3"), Rational(1)});
    PolyQ f3(std::vector<Rational>{Rational(-4), Rational(1)});
    PolyQ prod = f1 * f2 * f3;
    PolyA p = rational_poly(prod.coeffs, c2);
    auto roots = isolate_roots(p, RootInterval::whole(), dec("1/128"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].contains(Rational(-5)));
    CHECK(roots[1].contains(dec("1/3")));
    CHECK(roots[2].contains(Rational(4)));
}

TEST_CASE("chain degrees strictly decrease") {
    auto c3 = PhiContext::create(3);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<AlgebraicElement> cs;
        for (int i = 0; i < 6; ++i)
            cs.push_back(AlgebraicElement::from_alpha(Rational(static_cast<long>(rng() % 9) - 4),
                                                      Rational(static_cast<long>(rng() % 9) - 4), c3));
        PolyA p(std::move(cs));
        if (ev_trimmed(p).degree() < 1) continue;
        SturmChain chain = sturm_chain(p);
        for (std::size_t i = 1; i < chain.seq.size(); ++i)
            CHECK(chain.seq[i].degree() < chain.seq[i - 1].degree());
    }
}

TEST_CASE("resultant_q equals the Sylvester determinant oracle") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        int da = 1 + static_cast<int>(rng() % 4), db = 1 + static_cast<int>(rng() % 4);
        std::vector<Rational> as(static_cast<std::size_t>(da) + 1), bs(static_cast<std::size_t>(db) + 1);
        for (auto& c : as) c = make_rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
        for (auto& c : bs) c = make_rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
        PolyQ a(as), b(bs);
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(resultant_q(a, b) == oracle::sylvester_resultant(a, b));
    }
}

TEST_CASE("resultant_y commutes with evaluation") {
    // a = y^2 + x y + (x^2 - 1), b = x y - 2
    Poly2 a(std::vector<PolyQ>{PolyQ(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}),
                               PolyQ(std::vector<Rational>{Rational(0), Rational(1)}),
                               PolyQ(std::vector<Rational>{Rational(1)})});
    Poly2 b(std::vector<PolyQ>{PolyQ(std::vector<Rational>{Rational(-2)}),
                               PolyQ(std::vector<Rational>{Rational(0), Rational(1)})});
    PolyQ r = resultant_y(a, b);
    for (long x0 : {1, 2, 3, -2, 5}) {
        PolyQ ax(std::vector<Rational>{eval(a.coeffs[0], Rational(x0)), eval(a.coeffs[1], Rational(x0)),
                                       eval(a.coeffs[2], Rational(x0))});
        PolyQ bx(std::vector<Rational>{eval(b.coeffs[0], Rational(x0)), eval(b.coeffs[1], Rational(x0))});
        CHECK(eval(r, Rational(x0)) == oracle::sylvester_resultant(ax, bx));
    }
}

TEST_CASE("discriminant golden values") {
    auto c2 = PhiContext::create(2);
    // disc(x^2 + bx + c) with b = 0, c = -1 is 4
    PolyA p = rational_poly({Rational(-1), Rational(0), Rational(1)}, c2);
    AlgebraicElement d = discriminant(p);
    CHECK(d.rational_value() == 4);

    // disc((x - 1/2)^2) = 0
    PolyA sq = rational_poly({dec("1/4"), Rational(-1), Rational(1)}, c2);
    CHECK(sign_of(discriminant(sq)) == 0);

    // linear: disc = 1
    PolyA lin = rational_poly({Rational(7), Rational(3)}, c2);
    CHECK(discriminant(lin).rational_value() == 1);

    // degree 0 rejected
    PolyA cst = rational_poly({Rational(5)}, c2);
    CHECK_THROWS(discriminant(cst));
}

TEST_CASE("discriminant sign tracks repeated and complex roots") {
    auto c2 = PhiContext::create(2);
    // (x-1)^2 (x+2): repeated root -> disc = 0
    PolyQ f1(std::vector<Rational>{Rational(-1), Rational(1)});
    PolyQ f2(std::vector<Rational>{Rational(2), Rational(1)});
    PolyQ prod = f1 * f1 * f2;
    CHECK(sign_of(discriminant(rational_poly(prod.coeffs, c2))) == 0);

    // x^3 - 2x + 2 has one real root, one conjugate pair -> disc < 0
    PolyA p = rational_poly({Rational(2), Rational(-2), Rational(0), Rational(1)}, c2);
    CHECK(sign_of(discriminant(p)) == -1);
    CHECK(count_roots(p, RootInterval::whole()).first == 1);

    // (x-1)(x-2)(x-3): all real simple -> disc > 0
    PolyQ g = PolyQ(std::vector<Rational>{Rational(-1), Rational(1)}) *
              PolyQ(std::vector<Rational>{Rational(-2), Rational(1)}) *
              PolyQ(std::vector<Rational>{Rational(-3), Rational(1)});
    CHECK(sign_of(discriminant(rational_poly(g.coeffs, c2))) == 1);
}

TEST_CASE("discriminant with algebraic leading coefficient") {
    auto c2 = PhiContext::create(2);
    // p = alpha x^2 - 1: disc = b^2 - 4ac = 4*alpha
    AlgebraicElement alpha = AlgebraicElement::from_alpha(Rational(0), Rational(1), c2);
    PolyA p(std::vector<AlgebraicElement>{AlgebraicElement::from_rational(Rational(-1), c2),
                                          AlgebraicElement::from_rational(Rational(0), c2), alpha});
    AlgebraicElement d = discriminant(p);
    AlgebraicElement expect = AlgebraicElement::from_alpha(Rational(0), Rational(4), c2);
    CHECK(sign_of(d - expect) == 0);
}
