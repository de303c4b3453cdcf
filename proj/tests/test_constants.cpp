#include "doctest.h"

#include "kuc/constants.hpp"

#include <cmath>

using namespace kuc;
using namespace kuc::constants;

namespace {

// Reference rows (phi, psi, z, alpha), printed to 1e-4.
struct GoldenRow {
    long k;
    double phi, psi, z, alpha;
};
// The printed alpha_8 = 0.2319 is a misprint: both defining identities
// (phi^7 and 1/phi - 1) give 0.2320546..., confirmed by an independent
// exact bisection. The row below carries the corrected value; the misprint
// is asserted separately.
const GoldenRow kGolden[] = {
    {2, 0.6180, 0.3819, 0.3819, 0.6180}, {3, 0.6823, 0.3176, 0.3176, 0.4655},
    {4, 0.7244, 0.2755, 0.2755, 0.3802}, {5, 0.7548, 0.2451, 0.2416, 0.3247},
    {6, 0.7780, 0.2219, 0.2183, 0.2851}, {7, 0.7965, 0.2034, 0.2006, 0.2554},
    {8, 0.8116, 0.1883, 0.1863, 0.23205}, {16, 0.8771, 0.1228, 0.1204, 0.1400},
};

bool close4(const MpfrInterval& v, double want) { return std::abs(v.mid_double() - want) <= 1e-4; }

}  // namespace

TEST_CASE("table of constants matches the printed values to 1e-4") {
    for (const auto& g : kGolden) {
        CAPTURE(g.k);
        ConstantsRow r = row(g.k);
        CHECK(close4(r.phi, g.phi));
        CHECK(close4(r.psi, g.psi));
        CHECK(close4(r.z, g.z));
        CHECK(close4(r.alpha, g.alpha));
    }
}

TEST_CASE("alpha_8 erratum: printed 0.2319, true value 0.23205") {
    ConstantsRow r = row(8, 160);
    // two independent definitions agree far beyond table precision
    MpfrInterval one = MpfrInterval::from_long(1, 160);
    MpfrInterval alt = one / r.phi - one;
    CHECK((r.alpha - alt).mag_double() < 1e-35);
    CHECK(std::abs(r.alpha.mid_double() - 0.2320546314285723) < 1e-12);
    // the printed cell is off by more than its own 1e-4 precision
    CHECK(std::abs(r.alpha.mid_double() - 0.2319) > 1e-4);
    CHECK(std::abs(r.alpha.mid_double() - 0.2319) < 2e-4);
}

TEST_CASE("phi interval by MPFR bisection agrees with the rational path") {
    for (long k : {2L, 3L, 8L, 40L}) {
        MpfrInterval a = phi_interval(k, 128);
        IntervalValue b = refine_phi(static_cast<int>(k), dyadic_eps(100));
        CHECK(std::abs(a.mid_double() - b.midpoint().get_d()) < 1e-15);
    }
}

TEST_CASE("mu golden values") {
    // mu_2 = 1/alpha_2 ~ 1.6180
    CHECK(std::abs(mu(2).mid_double() - 1.6180339887) < 1e-8);
    // binary-split value at k = 3 is below 1/alpha_3 (the formula is only used from k = 5)
    double phi = 0.6180339887498949;
    double split3 = 1.0 / (2 * phi) + 1.0 / (2 * phi * phi);
    CHECK(std::abs(split3 - 2.118) < 1e-3);
    CHECK(std::abs(mu(3).mid_double() - 2.1479) < 1e-3);
    CHECK(split3 < mu(3).mid_double());
    // mu_4 / mu_5 ~ 0.8700
    double ratio = mu(4).mid_double() / mu(5).mid_double();
    CHECK(std::abs(ratio - 0.8700) < 2e-4);
}

TEST_CASE("z golden values and z = psi for k <= 4") {
    CHECK(std::abs(z(5).mid_double() - 0.2416) < 1e-4);
    CHECK(std::abs(z(16).mid_double() - 0.1204) < 1e-4);
    for (long k = 2; k <= 4; ++k) {
        ConstantsRow r = row(k, 160);
        // enclosures overlap to full precision
        CHECK(!r.z.certified_below(r.psi));
        CHECK(!r.psi.certified_below(r.z));
    }
}

TEST_CASE("alpha consistency: phi^{k-1} = 1/phi - 1 and phi < k/(k+1)") {
    for (long k = 2; k <= 10; ++k) {
        ConstantsRow r = row(k, 160);
        MpfrInterval one = MpfrInterval::from_long(1, 160);
        MpfrInterval alt = one / r.phi - one;
        MpfrInterval diff = r.alpha - alt;
        CHECK(diff.mag_double() < 1e-35);
        CHECK(r.phi.hi_double() < static_cast<double>(k) / static_cast<double>(k + 1));
    }
}

TEST_CASE("constants-side propositions for moderate k") {
    CheckReport zk = verify_prop_zk(200);
    if (!zk.passed())
        for (const auto& w : zk.witnesses) MESSAGE(w.expr, " -> ", w.value);
    CHECK(zk.passed());
    CheckReport lm = verify_lemma_mu(500);
    CHECK(lm.passed());
}

TEST_CASE("frequency bound: eps = 0 gives delta = 0 and the bare constant") {
    BoundQuery q;
    q.k = 3;
    q.eps = Rational(0);
    q.family_size = 1024;
    BoundResult r = frequency_bound(q);
    CHECK(r.delta == 0.0);
    CHECK(r.constant == "psi_k");
    CHECK(std::abs(r.guaranteed_fraction - 0.3176) < 1e-4);
    CHECK(!r.clamped);
}

TEST_CASE("frequency bound formula for k = 3") {
    BoundQuery q;
    q.k = 3;
    q.eps = make_rational(1, 100);
    q.family_size = Integer(1) << 20;
    BoundResult r = frequency_bound(q);
    double expect_delta = std::sqrt(0.03 + 0.02 * std::log(100.0) / std::log(1048576.0));
    CHECK(std::abs(r.delta - expect_delta) < 1e-12);
    CHECK(std::abs(r.guaranteed_fraction - (0.31767219617201 - expect_delta)) < 1e-9);
}

TEST_CASE("frequency bound for k = 2 reduces to the two-factor form") {
    BoundQuery q;
    q.k = 2;
    q.eps = make_rational(1, 50);
    q.family_size = 4096;
    BoundResult r = frequency_bound(q);
    double eps = 0.02;
    double expect = 2 * eps * (1.0 + std::log(1.0 / eps) / std::log(4096.0));
    CHECK(std::abs(r.delta - expect) < 1e-12);
}

TEST_CASE("frequency bound clamps at zero with a flag") {
    BoundQuery q;
    q.k = 5;
    q.eps = make_rational(49, 100);
    q.family_size = 4;
    BoundResult r = frequency_bound(q);
    CHECK(r.clamped);
    CHECK(r.guaranteed_fraction == 0.0);
}

TEST_CASE("frequency bound rejects bad queries") {
    BoundQuery q;
    q.k = 3;
    q.eps = make_rational(1, 2);
    q.family_size = 16;
    CHECK_THROWS(frequency_bound(q));
    q.eps = make_rational(-1, 10);
    CHECK_THROWS(frequency_bound(q));
    q.eps = Rational(0);
    q.family_size = 1;
    CHECK_THROWS(frequency_bound(q));
}
