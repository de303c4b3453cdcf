#pragma once

#include "kuc/interval.hpp"
#include "kuc/rational.hpp"

#include <mpfr.h>

#include <string>

namespace kuc {

/// Outward-rounded floating interval on top of MPFR. Every operation
/// rounds the lower endpoint down and the upper endpoint up, so the true
/// value of any composed expression lies inside the result.
class MpfrInterval {
  public:
    explicit MpfrInterval(mpfr_prec_t prec = 128);
    MpfrInterval(const MpfrInterval& o);
    MpfrInterval(MpfrInterval&& o) noexcept;
    MpfrInterval& operator=(const MpfrInterval& o);
    MpfrInterval& operator=(MpfrInterval&& o) noexcept;
    ~MpfrInterval();

    static MpfrInterval from_long(long v, mpfr_prec_t prec = 128);
    static MpfrInterval from_rational(const Rational& q, mpfr_prec_t prec = 128);
    static MpfrInterval from_rat_interval(const IntervalValue& v, mpfr_prec_t prec = 128);
    static MpfrInterval exact_zero(mpfr_prec_t prec = 128);

    mpfr_prec_t precision() const { return prec_; }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const { return (lo_double() + hi_double()) / 2; }

    bool contains_zero() const;
    /// +1 / -1 when the interval certifies the sign, 0 when undecided.
    int certified_sign() const;
    bool is_exact_zero() const;

    /// max(|lo|, |hi|) rounded up, as a double.
    double mag_double() const;
    /// hi - lo rounded up, as a double.
    double width_double() const;

    MpfrInterval operator-() const;
    MpfrInterval operator+(const MpfrInterval& o) const;
    MpfrInterval operator-(const MpfrInterval& o) const;
    MpfrInterval operator*(const MpfrInterval& o) const;
    /// Division by an interval excluding zero.
    MpfrInterval operator/(const MpfrInterval& o) const;

    MpfrInterval pow_ui(unsigned long e) const;
    /// Natural log of the absolute value; the interval must exclude zero.
    MpfrInterval log_abs() const;
    /// Natural log; requires a strictly positive interval.
    MpfrInterval log() const;
    MpfrInterval exp() const;
    /// n-th root of a strictly positive interval.
    MpfrInterval rootn(unsigned long n) const;
    MpfrInterval abs() const;

    /// True when this interval is entirely below the other (hi < o.lo).
    bool certified_below(const MpfrInterval& o) const;
    /// True when hi <= o.lo (non-strict separation).
    bool certified_leq(const MpfrInterval& o) const;

    MpfrInterval hull(const MpfrInterval& o) const;
    std::pair<MpfrInterval, MpfrInterval> split() const;

    std::string to_string(int digits = 20) const;
    /// Decimal midpoint with enough digits; for report emission.
    std::string mid_string(int digits = 20) const;
    std::string lo_string(int digits = 20) const;
    std::string hi_string(int digits = 20) const;

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }

  private:
    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
    friend MpfrInterval make_interval(mpfr_prec_t);
};

/// value +- error_bound view of an interval (midpoint form).
struct RealEval {
    double value = 0.0;
    double error_bound = 0.0;
};

RealEval to_real_eval(const MpfrInterval& v);

}  // namespace kuc
