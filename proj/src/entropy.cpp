#include "kuc/entropy.hpp"

#include "kuc/polyfamily.hpp"

#include <cmath>
#include <stdexcept>

namespace kuc::entropy {

MpfrInterval h(const MpfrInterval& x) {
    MpfrInterval one = MpfrInterval::from_long(1, x.precision());
    MpfrInterval one_minus = one - x;
    MpfrInterval t1 = x * x.log_abs();
    MpfrInterval t2 = one_minus * one_minus.log_abs();
    return -(t1 + t2);
}

MpfrInterval h_point(const Rational& x, mpfr_prec_t prec) {
    if (x == 0 || x == 1) return MpfrInterval::exact_zero(prec);
    return h(MpfrInterval::from_rational(x, prec));
}

MpfrInterval alpha_interval(const PhiContextPtr& ctx, mpfr_prec_t prec) {
    auto fine = ctx->refined(static_cast<unsigned long>(prec) + 8);
    return MpfrInterval::from_rat_interval(fine->alpha_enclosure(), prec);
}

MpfrInterval r_k_point(int k, const Rational& x, mpfr_prec_t prec) {
    return h_point(rational_pow(x, static_cast<unsigned long>(k)), prec);
}

MpfrInterval s_k_point(int k, const Rational& x, mpfr_prec_t prec) {
    MpfrInterval xs = MpfrInterval::from_rational(x, prec);
    return xs.pow_ui(static_cast<unsigned long>(k - 1)) * h_point(x, prec);
}

MpfrInterval f_k_point(int k, const Rational& x, const PhiContextPtr& ctx, mpfr_prec_t prec) {
    MpfrInterval alpha = alpha_interval(ctx, prec);
    return alpha * r_k_point(k, x, prec) - s_k_point(k, x, prec);
}

MpfrInterval f_k_interval(int k, const MpfrInterval& x, const MpfrInterval& alpha) {
    MpfrInterval xk = x.pow_ui(static_cast<unsigned long>(k));
    return alpha * h(xk) - x.pow_ui(static_cast<unsigned long>(k - 1)) * h(x);
}

MpfrInterval f_k_at_phi(int k, const PhiContextPtr& ctx, mpfr_prec_t prec) {
    auto fine = ctx->refined(static_cast<unsigned long>(prec) + 8);
    MpfrInterval phi = MpfrInterval::from_rat_interval(fine->enclosure(), prec);
    MpfrInterval alpha = MpfrInterval::from_rat_interval(fine->alpha_enclosure(), prec);
    return f_k_interval(k, phi, alpha);
}

MpfrInterval big_f_k(int k, const Rational& x, mpfr_prec_t prec) {
    if (x <= 0 || x >= 1) throw std::domain_error("F_k requires x in (0,1)");
    return r_k_point(k, x, prec) / s_k_point(k, x, prec);
}

MpfrInterval g_point(const Rational& x, mpfr_prec_t prec) {
    if (x <= 0 || x > 1) throw std::domain_error("g requires x in (0,1]");
    return h_point(x, prec) / MpfrInterval::from_rational(x, prec);
}

MpfrInterval m_k_point(const std::vector<Rational>& coords, mpfr_prec_t prec) {
    std::vector<Rational> interior;
    int zeros = 0, ones = 0;
    for (const auto& c : coords) {
        if (c < 0 || c > 1) throw std::domain_error("M_k requires coordinates in [0,1]");
        if (c == 0)
            ++zeros;
        else if (c == 1)
            ++ones;
        else
            interior.push_back(c);
    }
    const int k = static_cast<int>(coords.size());
    if (zeros > 0 || ones >= k - 1) {
        MpfrInterval one = MpfrInterval::from_long(1, prec);
        return one;
    }
    // drop the ones, recurse on what is left (all interior now)
    Rational prod(1);
    for (const auto& c : interior) prod *= c;
    MpfrInterval num = g_point(prod, prec);
    MpfrInterval den = MpfrInterval::exact_zero(prec);
    for (const auto& c : interior) den = den + g_point(c, prec);
    return num / den;
}

double h_double(double x) {
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log(std::abs(x)) - (1.0 - x) * std::log(std::abs(1.0 - x));
}

double big_f_k_double(int k, double x) {
    return h_double(std::pow(x, k)) / (std::pow(x, k - 1) * h_double(x));
}

double m_k_double(const std::vector<double>& coords) {
    const int k = static_cast<int>(coords.size());
    std::vector<double> interior;
    int zeros = 0, ones = 0;
    for (double c : coords) {
        if (c <= 0.0)
            ++zeros;
        else if (c >= 1.0)
            ++ones;
        else
            interior.push_back(c);
    }
    if (zeros > 0 || ones >= k - 1) return 1.0;
    double prod = 1.0;
    double den = 0.0;
    for (double c : interior) {
        prod *= c;
        den += h_double(c) / c;
    }
    return (h_double(prod) / prod) / den;
}

MpfrInterval h_deriv(int t, const MpfrInterval& x) {
    if (t < 0) throw std::invalid_argument("negative derivative order");
    if (t == 0) return h(x);
    mpfr_prec_t prec = x.precision();
    MpfrInterval one = MpfrInterval::from_long(1, prec);
    if (t == 1) {
        // log((1-x)/|x|)
        return (one - x).log_abs() - x.log_abs();
    }
    // (t-2)! (-1)^t (1/(x-1)^{t-1} - 1/x^{t-1})
    MpfrInterval xm1 = x - one;
    MpfrInterval a = one / xm1.pow_ui(static_cast<unsigned long>(t - 1));
    MpfrInterval b = one / x.pow_ui(static_cast<unsigned long>(t - 1));
    MpfrInterval fac = MpfrInterval::from_rational(Rational(factorial(static_cast<unsigned long>(t - 2))), prec);
    MpfrInterval val = fac * (a - b);
    return (t % 2 == 0) ? val : -val;
}

MpfrInterval s_k_deriv(int k, int t, const Rational& x, mpfr_prec_t prec) {
    // sum_j h^{(j)}(x) binom(k-1, t-j) t!/j! x^{k-t+j-1}
    MpfrInterval xs = MpfrInterval::from_rational(x, prec);
    MpfrInterval acc = MpfrInterval::exact_zero(prec);
    for (int j = 0; j <= t; ++j) {
        if (t - j > k - 1) continue;
        Integer bin = binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(t - j));
        if (bin == 0) continue;
        Rational coef = Rational(bin) * Rational(factorial(static_cast<unsigned long>(t))) /
                        Rational(factorial(static_cast<unsigned long>(j)));
        long e = k - t + j - 1;
        MpfrInterval power = e >= 0 ? xs.pow_ui(static_cast<unsigned long>(e))
                                    : MpfrInterval::from_long(1, prec) / xs.pow_ui(static_cast<unsigned long>(-e));
        MpfrInterval term = (j == 0 ? h(xs) : h_deriv(j, xs)) * power *
                            MpfrInterval::from_rational(coef, prec);
        acc = acc + term;
    }
    return acc;
}

MpfrInterval r_k_deriv(int k, int t, const Rational& x, mpfr_prec_t prec) {
    // sum_j (k-1)! C(k,t,j) h^{(j)}(x^k) x^{kj-t}
    MpfrInterval xs = MpfrInterval::from_rational(x, prec);
    MpfrInterval xk = xs.pow_ui(static_cast<unsigned long>(k));
    Rational kfac = Rational(factorial(static_cast<unsigned long>(k - 1)));
    MpfrInterval acc = MpfrInterval::exact_zero(prec);
    for (int j = 0; j <= t; ++j) {
        Rational c = family::c_coeff(k, t, j);
        if (c == 0) continue;
        long e = static_cast<long>(k) * j - t;
        MpfrInterval power = e >= 0 ? xs.pow_ui(static_cast<unsigned long>(e))
                                    : MpfrInterval::from_long(1, prec) / xs.pow_ui(static_cast<unsigned long>(-e));
        MpfrInterval term = (j == 0 ? h(xk) : h_deriv(j, xk)) * power *
                            MpfrInterval::from_rational(kfac * c, prec);
        acc = acc + term;
    }
    return acc;
}

}  // namespace kuc::entropy
