#include "doctest.h"

#include "kuc/entropy.hpp"
#include "kuc/polyfamily.hpp"

using namespace kuc;
using namespace kuc::family;

TEST_CASE("C coefficients: base cases and golden identities") {
    // C(k,0,0) = 1/(k-1)!
    CHECK(c_coeff(3, 0, 0) == Rational(1) / Rational(2));
    CHECK(c_coeff(5, 0, 0) == Rational(1) / Rational(24));
    // zero when exactly one index is zero
    CHECK(c_coeff(4, 3, 0) == 0);
    CHECK(c_coeff(4, 0, 2) == 0);
    // zero when t < j
    CHECK(c_coeff(4, 1, 3) == 0);
    CHECK(c_coeff(6, 2, 5) == 0);
    // C(3,2,1) = 3  (k/(k-t)! with k=3, t=2)
    CHECK(c_coeff(3, 2, 1) == 3);
    // C(k,t,1) = k/(k-t)! for 1 <= t <= k
    for (int k = 2; k <= 7; ++k)
        for (int t = 1; t <= k; ++t)
            CHECK(c_coeff(k, t, 1) == Rational(k) / Rational(factorial(static_cast<unsigned long>(k - t))));
    // and it vanishes beyond t = k
    CHECK(c_coeff(4, 5, 1) == 0);
    // (k-1)! C(k,6,2) = k^2 (k-1)(k-2)(31k^2 - 132k + 137) at k = 6
    long k = 6;
    Rational lhs = Rational(factorial(5)) * c_coeff(6, 6, 2);
    Rational rhs = Rational(k * k) * Rational(k - 1) * Rational(k - 2) * Rational(31 * k * k - 132 * k + 137);
    CHECK(lhs == rhs);
    // recurrence holds on stored entries
    for (long t = 1; t <= 7; ++t)
        for (long j = 1; j <= t; ++j)
            CHECK(c_coeff(6, t, j) ==
                  Rational(6 * j - t + 1) * c_coeff(6, t - 1, j) + Rational(6) * c_coeff(6, t - 1, j - 1));
}

TEST_CASE("sigma and rho structure for k = 2..7") {
    for (int k = 2; k <= 7; ++k) {
        CAPTURE(k);
        PolyQ sigma = build_sigma(k);
        PolyQ rho = build_rho(k);
        long k2 = static_cast<long>(k) * k;
        CHECK(sigma.degree() == k2 - 1);
        CHECK(sigma.leading() == 1);
        CHECK(rho.degree() == k2 - k);
        // sigma(0) = (-1)^{k+1} k, rho(0) = (-1)^{k+1} k^2
        Rational sgn = (k % 2 == 0) ? Rational(-1) : Rational(1);
        CHECK(sigma.coeffs[0] == sgn * Rational(k));
        CHECK(rho.coeffs[0] == sgn * Rational(static_cast<long>(k) * k));
        // rho has exactly k nonzero terms, all on powers of x^k
        long nonzero = 0;
        for (std::size_t i = 0; i < rho.coeffs.size(); ++i) {
            if (rho.coeffs[i] == 0) continue;
            ++nonzero;
            CHECK(i % static_cast<std::size_t>(k) == 0);
        }
        CHECK(nonzero == k);
    }
}

TEST_CASE("generated p_k matches the reference table exactly for k = 2..6") {
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        CheckReport rep = check_table_match(k);
        if (!rep.passed())
            for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
        CHECK(rep.passed());
    }
}

TEST_CASE("structure report passes for k = 2..8") {
    for (int k = 2; k <= 8; ++k) {
        CAPTURE(k);
        CheckReport rep = check_structure(k);
        if (!rep.passed())
            for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
        CHECK(rep.passed());
    }
}

TEST_CASE("p_k(0) sign alternates with k") {
    CHECK(check_p0_sign(3).passed());
    CHECK(check_p0_sign(4).passed());
    // k = 2: p_2(0) = 2 - 4 alpha < 0
    auto c2 = PhiContext::create(2);
    PolyA p2 = build_p(2, c2);
    CHECK(sign_at(p2, Rational(0)) == -1);
    CHECK(check_p0_sign(2).passed());
    CHECK(check_p0_sign(5).passed());
}

TEST_CASE("sigma sign remark holds empirically for small k") {
    for (int k = 2; k <= 7; ++k) {
        CAPTURE(k);
        CHECK(check_sigma_sign_remark(k).passed());
    }
}

TEST_CASE("unit interval root counts") {
    CHECK(unit_interval_root_count(2) == std::pair<long, long>(2, 2));
    CHECK(unit_interval_root_count(3) == std::pair<long, long>(2, 2));
    CHECK(unit_interval_root_count(4) == std::pair<long, long>(2, 2));
}

TEST_CASE("p_4 has exactly three simple real roots in total") {
    auto c4 = PhiContext::create(4);
    PolyA p4 = build_p(4, c4);
    auto counts = count_roots(p4, RootInterval::whole());
    CHECK(counts.first == 3);
    CHECK(counts.second == 3);
}

TEST_CASE("p_3 sanity: eval example from the k = 3 analysis") {
    auto c3 = PhiContext::create(3);
    PolyA p3 = build_p(3, c3);
    PolyA d4 = derivative(derivative(derivative(derivative(p3))));
    // p_3^(4)(1/2) = 810 alpha - 57 > 0
    AlgebraicElement v = eval_at(d4, make_rational(1, 2));
    CHECK(v == AlgebraicElement::from_alpha(Rational(-57), Rational(810), c3));
    CHECK(sign_of(v) == 1);
}

TEST_CASE("isolating the four roots of the k = 3 fourth derivative") {
    auto c3 = PhiContext::create(3);
    PolyA d4 = p_derivative(3, 4, c3);
    auto roots = isolate_roots(d4, RootInterval::whole(), make_rational(1, 1024));
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].lo > make_rational(-9, 10));
    CHECK(roots[0].hi < make_rational(-8, 10));
    CHECK(roots[1].lo > make_rational(-8, 10));
    CHECK(roots[1].hi < 0);
    CHECK(roots[2].lo > 0);
    CHECK(roots[2].hi < make_rational(1, 2));
    CHECK(roots[3].lo > make_rational(1, 2));
    for (const auto& r : roots) CHECK(r.width() <= make_rational(1, 1024));
}

TEST_CASE("appendix verification suite passes") {
    auto reports = verify_appendix(4);
    REQUIRE(!reports.empty());
    for (const auto& rep : reports) {
        CAPTURE(rep.claim_id);
        if (!rep.passed())
            for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
        CHECK(rep.passed());
    }
}

TEST_CASE("k = 2 derivative pattern and dual-route discriminant consistency") {
    // p_2 has two roots in (0,1) plus a negative root: pattern starts at 3
    CHECK(derivative_root_pattern(2) == std::vector<long>{3, 2, 1});
    // for squarefree entries, sign(disc) = (-1)^{(deg - real_roots)/2};
    // the Sturm route and the resultant route must agree
    for (int k : {2, 3}) {
        CAPTURE(k);
        auto pat = derivative_root_pattern(k);
        auto dpat = discriminant_sign_pattern(k);
        auto ctx = PhiContext::create(k);
        PolyA cur = build_p(k, ctx);
        for (std::size_t i = 0; i < pat.size(); ++i) {
            if (dpat[i] != 0) {
                long d = cur.degree();
                int expect = (((d - pat[i]) / 2) % 2 == 0) ? 1 : -1;
                CHECK(expect == dpat[i]);
            }
            cur = derivative(cur);
        }
    }
}

TEST_CASE("derivative identity: exact equality at x = 3/10 for k = 2..6") {
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        CheckReport rep = verify_derivative_identity(k, {make_rational(3, 10)});
        if (!rep.passed())
            for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
        CHECK(rep.passed());
    }
}

TEST_CASE("derivative identity at additional sample points") {
    CheckReport rep = verify_derivative_identity(3, {make_rational(1, 7), make_rational(9, 10)});
    CHECK(rep.passed());
}
