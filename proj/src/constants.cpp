#include "kuc/constants.hpp"

#include <cmath>
#include <sstream>

namespace kuc::constants {

namespace {

// G(x) = x^k + x - 1 evaluated as an interval.
MpfrInterval defining_at(long k, const MpfrInterval& x) {
    return x.pow_ui(static_cast<unsigned long>(k)) + x - MpfrInterval::from_long(1, x.precision());
}

}  // namespace

MpfrInterval phi_interval(long k, mpfr_prec_t prec) {
    if (k < 2) throw std::invalid_argument("phi_k requires k >= 2");
    mpfr_prec_t work = prec + 16;
    // [1/2, 1]: G(1/2) = 2^-k - 1/2 < 0, G(1) = 1 > 0
    MpfrInterval lo = MpfrInterval::from_rational(make_rational(1, 2), work);
    MpfrInterval hi = MpfrInterval::from_long(1, work);
    for (int iter = 0; iter < static_cast<int>(prec) + 8; ++iter) {
        MpfrInterval mid = (lo + hi) * MpfrInterval::from_rational(make_rational(1, 2), work);
        MpfrInterval val = defining_at(k, mid);
        int s = val.certified_sign();
        if (s == 0) break;  // cannot certify the midpoint sign at this precision
        if (s < 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo.hull(hi);
}

namespace {

// Exact rational interval for mu_k from rational phi enclosures.
IntervalValue mu_rational(long k, unsigned long phi_bits) {
    if (k >= 2 && k <= 4) {
        auto ctx = PhiContext::create(static_cast<int>(k))->refined(phi_bits);
        return interval_recip(ctx->alpha_enclosure());
    }
    IntervalValue phi = refine_phi(2, dyadic_eps(phi_bits));
    long p = 0;
    while ((1L << (p + 1)) <= k) ++p;
    long q = k - (1L << p);
    Rational pow2(1L << p);
    IntervalValue phip = interval_pow(phi, static_cast<unsigned long>(p));
    IntervalValue term1 = IntervalValue(Rational(pow2 - q) / pow2) / phip;
    if (q == 0) return term1;
    IntervalValue phip1 = phip * phi;
    IntervalValue term2 = IntervalValue(Rational(q) / pow2) / phip1;
    return term1 + term2;
}

}  // namespace

MpfrInterval mu(long k, mpfr_prec_t prec) {
    if (k < 2) throw std::invalid_argument("mu_k requires k >= 2");
    return MpfrInterval::from_rat_interval(mu_rational(k, static_cast<unsigned long>(prec) + 8), prec);
}

MpfrInterval z(long k, mpfr_prec_t prec) {
    MpfrInterval m = mu(k, prec + 8);
    MpfrInterval root = m.rootn(static_cast<unsigned long>(k - 1));
    MpfrInterval one = MpfrInterval::from_long(1, prec + 8);
    return one - one / root;
}

ConstantsRow row(long k, mpfr_prec_t prec) {
    ConstantsRow r;
    r.k = k;
    MpfrInterval one = MpfrInterval::from_long(1, prec + 8);
    if (k <= 64) {
        auto ctx = PhiContext::create(static_cast<int>(k))->refined(static_cast<unsigned long>(prec) + 8);
        r.phi = MpfrInterval::from_rat_interval(ctx->enclosure(), prec + 8);
        r.alpha = MpfrInterval::from_rat_interval(ctx->alpha_enclosure(), prec + 8);
    } else {
        r.phi = phi_interval(k, prec + 8);
        r.alpha = one / r.phi - one;  // alpha = 1/phi - 1
    }
    r.psi = one - r.phi;
    r.z = z(k, prec);
    r.mu = mu(k, prec);
    return r;
}

std::vector<ConstantsRow> table1(const std::vector<long>& ks, mpfr_prec_t prec) {
    std::vector<ConstantsRow> rows;
    rows.reserve(ks.size());
    for (long k : ks) rows.push_back(row(k, prec));
    return rows;
}

CheckReport verify_prop_zk(long kmax, mpfr_prec_t prec) {
    CheckReport rep("prop-5.1-zk", "z_k bounds: z_k > log k/(3k), 1/2 < z_k/psi_k <= 1, psi brackets, mu monotone");
    rep.precision_bits = static_cast<unsigned long>(prec);
    long violations = 0;
    MpfrInterval one = MpfrInterval::from_long(1, prec);
    MpfrInterval half = MpfrInterval::from_rational(make_rational(1, 2), prec);
    MpfrInterval prev_mu(prec);
    bool have_prev = false;
    for (long k = 2; k <= kmax; ++k) {
        MpfrInterval phi = phi_interval(k, prec);
        MpfrInterval psi = one - phi;
        MpfrInterval zk = z(k, prec);
        MpfrInterval ki = MpfrInterval::from_long(k, prec);
        MpfrInterval logk = ki.log();
        MpfrInterval bound = logk / (MpfrInterval::from_long(3, prec) * ki);

        if (!bound.certified_below(zk)) {
            ++violations;
            rep.require(false, "z_" + std::to_string(k) + " > log k/(3k)", zk.to_string(8));
        }
        MpfrInterval ratio = zk / psi;
        if (!half.certified_below(ratio)) {
            ++violations;
            rep.require(false, "z/psi > 1/2 at k=" + std::to_string(k), ratio.to_string(8));
        }
        if (k <= 4) {
            // z_k = psi_k here: the enclosures must overlap
            bool overlap = !(zk.certified_below(psi) || psi.certified_below(zk));
            if (!overlap) {
                ++violations;
                rep.require(false, "z = psi at k=" + std::to_string(k),
                            zk.to_string(10) + " vs " + psi.to_string(10));
            }
        } else if (!zk.certified_below(psi)) {
            ++violations;
            rep.require(false, "z < psi at k=" + std::to_string(k), ratio.to_string(8));
        }
        if (k >= 3) {
            MpfrInterval lower = MpfrInterval::from_long(2, prec) * logk / (MpfrInterval::from_long(3, prec) * ki);
            MpfrInterval upper = logk / ki;
            if (!lower.certified_leq(psi) || !psi.certified_below(upper)) {
                ++violations;
                rep.require(false, "psi bracket at k=" + std::to_string(k), psi.to_string(8));
            }
        }
        MpfrInterval mk = mu(k, prec);
        if (have_prev && !prev_mu.certified_below(mk)) {
            ++violations;
            rep.require(false, "mu increasing at k=" + std::to_string(k), mk.to_string(8));
        }
        prev_mu = mk;
        have_prev = true;
    }
    rep.note("k range", "2.." + std::to_string(kmax));
    rep.require(violations == 0, "violations", std::to_string(violations));

    // Large-k ratio probe at k = 2^20: z_k k/log k approaches the limit
    // log(1/phi)/log 2 quickly, while z_k/psi_k itself converges only at
    // log log k / log k speed (the true ratio is also reported).
    {
        long k20 = 1L << 20;
        MpfrInterval zk = z(k20, prec);
        MpfrInterval ki = MpfrInterval::from_long(k20, prec);
        MpfrInterval surrogate = zk * ki / ki.log();
        IntervalValue phi2 = refine_phi(2, dyadic_eps(static_cast<unsigned long>(prec)));
        MpfrInterval phi2i = MpfrInterval::from_rat_interval(phi2, prec);
        MpfrInterval limit = -(phi2i.log()) / MpfrInterval::from_long(2, prec).log();
        double diff = std::abs(surrogate.mid_double() - limit.mid_double());
        rep.note("limit constant log(1/phi)/log 2", limit.to_string(10));
        rep.note("z_k k/log k at k=2^20", surrogate.to_string(10));
        rep.require(diff <= 0.02, "ratio within 0.02 of limit at k=2^20", std::to_string(diff));

        MpfrInterval psi20 = one - phi_interval(k20, prec);
        MpfrInterval true_ratio = zk / psi20;
        rep.note("true z/psi at k=2^20 (slow convergence)", true_ratio.to_string(10));
    }
    return rep;
}

CheckReport verify_lemma_mu(long kmax) {
    CheckReport rep("lemma-4.3-mu", "mu_{k-1}/mu_k > (k-1)/k, exact rational interval certificates");
    const unsigned long bits = 160;
    long violations = 0;
    IntervalValue prev = mu_rational(2, bits);
    for (long k = 3; k <= kmax; ++k) {
        IntervalValue cur = mu_rational(k, bits);
        IntervalValue ratio = prev / cur;
        Rational target = make_rational(k - 1, k);
        if (!(ratio.lo > target)) {
            ++violations;
            rep.require(false, "mu ratio at k=" + std::to_string(k),
                        ratio.lo.get_str() + " vs " + target.get_str());
        }
        prev = cur;
    }
    rep.note("k range", "3.." + std::to_string(kmax));
    rep.require(violations == 0, "violations", std::to_string(violations));
    return rep;
}

BoundResult frequency_bound(const BoundQuery& q, mpfr_prec_t prec) {
    if (q.k < 2) throw std::invalid_argument("bound requires k >= 2");
    if (q.eps < 0 || q.eps >= make_rational(1, 2)) throw std::invalid_argument("eps must lie in [0, 1/2)");
    if (q.family_size < 2) throw std::invalid_argument("family size must be at least 2");

    BoundResult out;
    MpfrInterval delta(prec);
    if (q.eps > 0) {
        MpfrInterval eps = MpfrInterval::from_rational(q.eps, prec);
        MpfrInterval logF = MpfrInterval::from_rational(Rational(q.family_size), prec).log();
        MpfrInterval inner = MpfrInterval::from_long(q.k, prec) * eps +
                             MpfrInterval::from_long(2, prec) * eps *
                                 (MpfrInterval::from_long(1, prec) / eps).log() / logF;
        delta = (q.k == 2) ? inner : inner.rootn(static_cast<unsigned long>(q.k - 1));
    }
    out.delta = delta.mid_double();

    MpfrInterval constant(prec);
    if (q.k <= 4) {
        auto ctx = PhiContext::create(q.k)->refined(static_cast<unsigned long>(prec) + 8);
        constant = MpfrInterval::from_rat_interval(ctx->psi_enclosure(), prec);
        out.constant = "psi_k";
    } else {
        constant = z(q.k, prec);
        out.constant = "z_k";
    }
    out.constant_value = constant.mid_double();
    MpfrInterval frac = constant - delta;
    out.guaranteed_fraction = frac.mid_double();
    if (out.guaranteed_fraction < 0) {
        out.guaranteed_fraction = 0;
        out.clamped = true;
    }
    return out;
}

}  // namespace kuc::constants
