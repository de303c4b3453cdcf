#include "doctest.h"

#include "kuc/analysis.hpp"
#include "kuc/constants.hpp"

#include <cmath>

using namespace kuc;
using namespace kuc::analysis;

TEST_CASE("extended entropy h: golden points") {
    // h(1/2) = log 2
    CHECK(std::abs(entropy::h_point(make_rational(1, 2)).mid_double() - std::log(2.0)) < 1e-15);
    // h(0) = h(1) = 0 exactly
    CHECK(entropy::h_point(Rational(0)).is_exact_zero());
    CHECK(entropy::h_point(Rational(1)).is_exact_zero());
    // extended branch: h(-1) = -2 log 2
    CHECK(std::abs(entropy::h_point(Rational(-1)).mid_double() + 2 * std::log(2.0)) < 1e-15);
}

TEST_CASE("h symmetry about 1/2 on [0,1]") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        Rational x = make_rational(static_cast<long>(rng() % 1000) + 1, 1002);
        double a = entropy::h_point(x).mid_double();
        double b = entropy::h_point(Rational(1) - x).mid_double();
        CHECK(std::abs(a - b) < 1e-20);
        CHECK(a <= std::log(2.0) + 1e-20);
    }
}

TEST_CASE("f_k vanishes at 0, 1 and (doubly) at phi_k") {
    for (int k = 2; k <= 5; ++k) {
        CAPTURE(k);
        auto ctx = PhiContext::create(k);
        CHECK(entropy::f_k_point(k, Rational(0), ctx).is_exact_zero());
        CHECK(entropy::f_k_point(k, Rational(1), ctx).is_exact_zero());
        MpfrInterval at_phi = entropy::f_k_at_phi(k, ctx, 256);
        CHECK(at_phi.mag_double() < 1e-20);
        // central difference for f'(phi): tiny as well
        Rational mid = ctx->refined(128)->enclosure().midpoint();
        Rational hstep = dyadic_eps(30);
        double d = (entropy::f_k_point(k, mid + hstep, ctx, 256).mid_double() -
                    entropy::f_k_point(k, mid - hstep, ctx, 256).mid_double()) /
                   (2 * hstep.get_d());
        CHECK(std::abs(d) < 1e-7);
    }
}

TEST_CASE("f_2(1/2) is a hair above zero") {
    auto ctx = PhiContext::create(2);
    double v = entropy::f_k_point(2, make_rational(1, 2), ctx).mid_double();
    // alpha_2 h(1/4) - (1/2) h(1/2); direct evaluation gives ~ +0.0009
    CHECK(v > 0.0008);
    CHECK(v < 0.0010);
}

TEST_CASE("F_k(phi_k) = 1/alpha_k") {
    for (int k = 2; k <= 5; ++k) {
        auto ctx = PhiContext::create(k)->refined(128);
        Rational near_phi = ctx->enclosure().midpoint();
        double want = 1.0 / MpfrInterval::from_rat_interval(ctx->alpha_enclosure()).mid_double();
        double got = entropy::big_f_k(k, near_phi).mid_double();
        CHECK(std::abs(got - want) < 1e-9);  // F is stationary-free here but phi is only approximate
    }
    CHECK(std::abs(entropy::big_f_k(3, refine_phi(3, dyadic_eps(80)).midpoint()).mid_double() - 2.1479) < 1e-3);
}

TEST_CASE("M_k boundary rules") {
    // zero coordinate -> exactly 1
    MpfrInterval v = entropy::m_k_point({Rational(0), make_rational(1, 3), make_rational(1, 2)});
    CHECK(v.mid_double() == 1.0);
    // k-1 ones -> 1
    CHECK(entropy::m_k_point({Rational(1), Rational(1), make_rational(1, 2)}).mid_double() == 1.0);
    // ones are dropped: M_3(x, y, 1) = M_2(x, y)
    MpfrInterval with_one = entropy::m_k_point({make_rational(1, 3), make_rational(2, 5), Rational(1)});
    MpfrInterval two = entropy::m_k_point({make_rational(1, 3), make_rational(2, 5)});
    CHECK(std::abs(with_one.mid_double() - two.mid_double()) < 1e-25);
}

TEST_CASE("M_2 near (phi, phi) approaches 1/(2 phi)") {
    Rational phi_mid = refine_phi(2, dyadic_eps(60)).midpoint();
    double v = entropy::m_k_point({phi_mid, phi_mid}).mid_double();
    CHECK(std::abs(v - 0.80901699437) < 1e-9);
}

TEST_CASE("M_k on the diagonal equals F_k(t)/k") {
    for (int k = 2; k <= 4; ++k) {
        Rational t = make_rational(3, 7);
        std::vector<Rational> pt(static_cast<std::size_t>(k), t);
        double diag = entropy::m_k_point(pt).mid_double();
        double f = entropy::big_f_k(k, t).mid_double() / k;
        CHECK(std::abs(diag - f) < 1e-15);
    }
}

TEST_CASE("M_k boundary recursion matches interior limits") {
    // approach (x, y, 1) along x3 -> 1
    Rational x = make_rational(2, 7), y = make_rational(3, 5);
    double target = entropy::m_k_point({x, y, Rational(1)}).mid_double();
    double prev_gap = 1e9;
    for (long d : {100L, 10000L, 1000000L}) {
        Rational x3 = Rational(1) - make_rational(1, d);
        double v = entropy::m_k_point({x, y, x3}).mid_double();
        double gap = std::abs(v - target);
        CHECK(gap < prev_gap + 1e-12);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-4);
}

TEST_CASE("interior monotone chain: M_k < M_{k-1} after merging two coordinates") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Rational a = make_rational(static_cast<long>(rng() % 900) + 50, 1000);
        Rational b = make_rational(static_cast<long>(rng() % 900) + 50, 1000);
        Rational c = make_rational(static_cast<long>(rng() % 900) + 50, 1000);
        double m3 = entropy::m_k_point({a, b, c}).mid_double();
        double m2 = entropy::m_k_point({a * b, c}).mid_double();
        CHECK(m3 < m2);
        CHECK(m3 < 1.0);
    }
}

TEST_CASE("f_k nonnegativity report, small grid") {
    for (int k : {2, 3}) {
        CAPTURE(k);
        FkOptions opt;
        opt.grid_size = 2000;
        CheckReport rep = verify_fk_nonneg(k, opt);
        if (!rep.passed())
            for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
        CHECK(rep.passed());
    }
}

TEST_CASE("f_k nonnegativity rejects bad parameters") {
    FkOptions opt;
    opt.grid_size = 10;
    CHECK_THROWS(verify_fk_nonneg(2, opt));
    opt.grid_size = 2000;
    opt.exclusion_radius = Rational(0);
    CHECK_THROWS(verify_fk_nonneg(2, opt));
}

TEST_CASE("entropy product inequality, sampled") {
    CheckReport rep = verify_lemma_cl(3000, 20240817);
    if (!rep.passed())
        for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
    CHECK(rep.passed());
    CHECK(rep.seed.has_value());
}

TEST_CASE("k-fold product inequality, sampled") {
    for (int k : {2, 3, 4}) {
        CAPTURE(k);
        CheckReport rep = verify_corollary_main(k, 800, 7);
        if (!rep.passed())
            for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
        CHECK(rep.passed());
    }
}

TEST_CASE("minimum of M_2 sits at (phi, phi)") {
    MinimizeResult res = minimize_m_k(2, 1e-9, 99);
    REQUIRE(res.point.size() == 2);
    CHECK(std::abs(res.point[0] - 0.6180339887) < 1e-5);
    CHECK(std::abs(res.point[1] - 0.6180339887) < 1e-5);
    CHECK(std::abs(res.value - 0.8090169943) < 1e-9);
    CheckReport rep = verify_minimize_m_k(2, 1e-9, 99);
    if (!rep.passed())
        for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
    CHECK(rep.passed());
}

TEST_CASE("minimum checks for k = 3 and 4") {
    for (int k : {3, 4}) {
        CAPTURE(k);
        CheckReport rep = verify_minimize_m_k(k, 1e-7, 123);
        if (!rep.passed())
            for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
        CHECK(rep.passed());
    }
    // diagonal scan value at k = 4 near phi_4: F_4(phi_4)/4 = mu_4/4
    MinimizeResult res = minimize_m_k(4, 1e-7, 123);
    CHECK(std::abs(res.value - res.mu_over_k) < 1e-7);
}

TEST_CASE("union entropy inequality on exhaustive small instances") {
    CheckReport rep = verify_lemma_main_small(2, 2, 300, 5150);
    if (!rep.passed())
        for (const auto& w : rep.witnesses) MESSAGE(w.expr, " -> ", w.value);
    CHECK(rep.passed());
    CheckReport rep3 = verify_lemma_main_small(3, 2, 100, 5151);
    CHECK(rep3.passed());
    CheckReport repk3 = verify_lemma_main_small(2, 3, 100, 5152);
    CHECK(repk3.passed());
    CHECK_THROWS(verify_lemma_main_small(5, 2, 1, 1));
}

TEST_CASE("single-bit product distribution reduces to F_k(q) >= mu_k") {
    // each variable Bernoulli over one bit with Pr[0] = q:
    // H(union) = h(q^k), sum H = k h(q), p = q
    JointDistribution d;
    d.n = 1;
    d.k = 3;
    Rational q = make_rational(3, 5);
    d.marginals.assign(3, {q, Rational(1) - q});
    double hu = d.union_entropy().mid_double();
    double hq = entropy::h_point(rational_pow(q, 3)).mid_double();
    CHECK(std::abs(hu - hq) < 1e-25);
    CHECK(d.min_zero_marginal() == q);
    double sum = 0;
    for (int j = 0; j < 3; ++j) sum += d.variable_entropy(j).mid_double();
    CHECK(std::abs(sum - 3 * entropy::h_point(q).mid_double()) < 1e-25);
    // the inequality at this instance is exactly F_3(q) >= mu_3
    double lhs_over_rhs = hu / (std::pow(q.get_d(), 2) * (constants::mu(3).mid_double() / 3) * sum);
    double fk_over_mu = entropy::big_f_k(3, q).mid_double() / constants::mu(3).mid_double();
    CHECK(std::abs(lhs_over_rhs - fk_over_mu) < 1e-12);
    CHECK(fk_over_mu >= 1.0);
}
