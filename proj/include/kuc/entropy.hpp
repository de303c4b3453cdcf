#pragma once

#include "kuc/phi.hpp"
#include "kuc/real.hpp"

#include <vector>

namespace kuc::entropy {

/// Extended binary entropy -x log|x| - (1-x) log|1-x| on an interval that
/// avoids {0, 1}. Natural logarithm.
MpfrInterval h(const MpfrInterval& x);

/// h at an exact rational point; x = 0 and x = 1 give the exact zero interval.
MpfrInterval h_point(const Rational& x, mpfr_prec_t prec = 128);

/// alpha_k = phi_k^{k-1} as an outward interval.
MpfrInterval alpha_interval(const PhiContextPtr& ctx, mpfr_prec_t prec = 128);

/// r_k(x) = h(x^k).
MpfrInterval r_k_point(int k, const Rational& x, mpfr_prec_t prec = 128);

/// s_k(x) = x^{k-1} h(x).
MpfrInterval s_k_point(int k, const Rational& x, mpfr_prec_t prec = 128);

/// f_k(x) = alpha_k h(x^k) - x^{k-1} h(x) at a rational point.
MpfrInterval f_k_point(int k, const Rational& x, const PhiContextPtr& ctx, mpfr_prec_t prec = 128);

/// f_k over an interval contained in (0, 1); used by the positivity search.
MpfrInterval f_k_interval(int k, const MpfrInterval& x, const MpfrInterval& alpha);

/// f_k over the phi enclosure itself (the interesting double zero).
MpfrInterval f_k_at_phi(int k, const PhiContextPtr& ctx, mpfr_prec_t prec = 256);

/// F_k(x) = h(x^k) / (x^{k-1} h(x)) for x in (0, 1).
MpfrInterval big_f_k(int k, const Rational& x, mpfr_prec_t prec = 128);

/// g(x) = h(x)/x for x in (0, 1].
MpfrInterval g_point(const Rational& x, mpfr_prec_t prec = 128);

/// M_k(x_1..x_k) = g(prod x_i) / sum g(x_i) with the boundary extension:
/// any zero coordinate, or at least k-1 ones, gives exactly 1; ones are
/// dropped and the function recurses on the remaining coordinates.
MpfrInterval m_k_point(const std::vector<Rational>& coords, mpfr_prec_t prec = 128);

/// Same boundary rules in plain double arithmetic (for optimizers).
double m_k_double(const std::vector<double>& coords);
double big_f_k_double(int k, double x);
double h_double(double x);

/// h^{(t)} on an interval: t = 0 is h itself, t = 1 is log((1-x)/|x|),
/// t >= 2 is (t-2)! (-1)^t (1/(x-1)^{t-1} - 1/x^{t-1}).
MpfrInterval h_deriv(int t, const MpfrInterval& x);

/// t-th derivative of s_k at a rational point away from {0, 1} (the
/// binomial-sum expansion in h^{(j)}).
MpfrInterval s_k_deriv(int k, int t, const Rational& x, mpfr_prec_t prec = 128);

/// t-th derivative of r_k at a rational point (C(k,t,j) expansion).
MpfrInterval r_k_deriv(int k, int t, const Rational& x, mpfr_prec_t prec = 128);

}  // namespace kuc::entropy
