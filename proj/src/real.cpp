#include "kuc/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kuc {

MpfrInterval::MpfrInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

MpfrInterval::MpfrInterval(const MpfrInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

MpfrInterval::MpfrInterval(MpfrInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

MpfrInterval& MpfrInterval::operator=(const MpfrInterval& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

MpfrInterval& MpfrInterval::operator=(MpfrInterval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

MpfrInterval::~MpfrInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

MpfrInterval MpfrInterval::from_long(long v, mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::from_rat_interval(const IntervalValue& v, mpfr_prec_t prec) {
    MpfrInterval r(prec);
    mpfr_set_q(r.lo_, v.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::exact_zero(mpfr_prec_t prec) { return MpfrInterval(prec); }

bool MpfrInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

int MpfrInterval::certified_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool MpfrInterval::is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

double MpfrInterval::mag_double() const {
    return std::max(std::abs(lo_double()), std::abs(hi_double()));
}

double MpfrInterval::width_double() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

MpfrInterval MpfrInterval::operator-() const {
    MpfrInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::operator+(const MpfrInterval& o) const {
    MpfrInterval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::operator-(const MpfrInterval& o) const {
    MpfrInterval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::operator*(const MpfrInterval& o) const {
    MpfrInterval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

MpfrInterval MpfrInterval::operator/(const MpfrInterval& o) const {
    if (o.contains_zero()) throw std::domain_error("interval division across zero");
    MpfrInterval inv(o.prec_);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

MpfrInterval MpfrInterval::pow_ui(unsigned long e) const {
    MpfrInterval r(prec_);
    if (e == 0) {
        mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
        mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    bool even = (e % 2 == 0);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        if (even) {
            mpfr_pow_ui(r.lo_, hi_, e, MPFR_RNDD);
            mpfr_pow_ui(r.hi_, lo_, e, MPFR_RNDU);
        } else {
            mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
            mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
        }
    } else {
        if (even) {
            mpfr_set_zero(r.lo_, 1);
            mpfr_t a, b;
            mpfr_init2(a, prec_);
            mpfr_init2(b, prec_);
            mpfr_pow_ui(a, lo_, e, MPFR_RNDU);
            mpfr_pow_ui(b, hi_, e, MPFR_RNDU);
            mpfr_max(r.hi_, a, b, MPFR_RNDU);
            mpfr_clear(a);
            mpfr_clear(b);
        } else {
            mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
            mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
        }
    }
    return r;
}

MpfrInterval MpfrInterval::abs() const {
    MpfrInterval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_t a;
    mpfr_init2(a, prec_);
    mpfr_neg(a, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, a, hi_, MPFR_RNDU);
    mpfr_clear(a);
    return r;
}

MpfrInterval MpfrInterval::log_abs() const {
    if (contains_zero()) throw std::domain_error("log_abs of an interval containing zero");
    return abs().log();
}

MpfrInterval MpfrInterval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of a non-positive interval");
    MpfrInterval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::exp() const {
    MpfrInterval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::rootn(unsigned long n) const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("rootn of a non-positive interval");
    MpfrInterval r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

bool MpfrInterval::certified_below(const MpfrInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

bool MpfrInterval::certified_leq(const MpfrInterval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }

MpfrInterval MpfrInterval::hull(const MpfrInterval& o) const {
    MpfrInterval r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

std::pair<MpfrInterval, MpfrInterval> MpfrInterval::split() const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    MpfrInterval a(prec_), b(prec_);
    mpfr_set(a.lo_, lo_, MPFR_RNDD);
    mpfr_set(a.hi_, mid, MPFR_RNDU);
    mpfr_set(b.lo_, mid, MPFR_RNDD);
    mpfr_set(b.hi_, hi_, MPFR_RNDU);
    mpfr_clear(mid);
    return {std::move(a), std::move(b)};
}

namespace {

std::string mpfr_decimal(const mpfr_t v, int digits) {
    char buf[512];
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), v);
    return std::string(buf);
}

}  // namespace

std::string MpfrInterval::to_string(int digits) const {
    return "[" + mpfr_decimal(lo_, digits) + ", " + mpfr_decimal(hi_, digits) + "]";
}

std::string MpfrInterval::mid_string(int digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    std::string s = mpfr_decimal(mid, digits);
    mpfr_clear(mid);
    return s;
}

std::string MpfrInterval::lo_string(int digits) const { return mpfr_decimal(lo_, digits); }

std::string MpfrInterval::hi_string(int digits) const { return mpfr_decimal(hi_, digits); }

RealEval to_real_eval(const MpfrInterval& v) {
    RealEval r;
    r.value = v.mid_double();
    r.error_bound = v.width_double() / 2;
    return r;
}

}  // namespace kuc
