#pragma once

#include "kuc/real.hpp"
#include "kuc/report.hpp"
#include "kuc/resultant.hpp"
#include "kuc/sturm.hpp"

#include <utility>
#include <vector>

namespace kuc::family {

/// Coefficients of the derivative expansion of h(x^k):
/// C(k,0,0) = 1/(k-1)!, C(k,t,j) = 0 when exactly one of t, j is zero,
/// C(k,t,j) = (kj - t + 1) C(k,t-1,j) + k C(k,t-1,j-1) otherwise.
Rational c_coeff(int k, long t, long j);

/// sigma_k: degree k^2 - 1, monic, integer coefficients.
PolyQ build_sigma(int k);

/// rho_k: degree k^2 - k, k nonzero terms when written in y = x^k.
PolyQ build_rho(int k);

/// p_k = alpha_k * rho_k - sigma_k over Q[x]/(x^k + x - 1);
/// degree k^2 - 1, leading coefficient -1, coefficients a + b*alpha_k.
PolyA build_p(int k, PhiContextPtr ctx = nullptr);

/// Hand-transcribed reference polynomial, available for k = 2..6.
bool has_reference_poly(int k);
PolyA reference_poly(int k, const PhiContextPtr& ctx);

/// i-th derivative of p_k (0 <= i).
PolyA p_derivative(int k, int order, const PhiContextPtr& ctx);

CheckReport check_table_match(int k);
CheckReport check_structure(int k);         // degrees, leading coeff, sigma(0), rho(0), rho term count
CheckReport check_p0_sign(int k);           // sign of p_k(0): + for odd k, - for even k
CheckReport check_sigma_sign_remark(int k); // empirical: all sigma terms but one share a sign

std::pair<long, long> unit_interval_root_count(int k);
std::vector<long> derivative_root_pattern(int k);
std::vector<int> discriminant_sign_pattern(int k);

/// Full replication of the k = 4 derivative analysis plus the k = 3
/// spot checks: golden derivative polynomials, exact sign evaluations,
/// bracketing root counts, root pattern, discriminant pattern.
std::vector<CheckReport> verify_appendix(int kmax_pattern = 4);

/// Exact identity alpha_k r_k^{(k+1)} - s_k^{(k+1)} =
/// (k-1)! p_k(x) / (x (x^k - 1)^k) at rational sample points, with a
/// finite-difference cross-check of s_k^{(k+1)} and the t <= k-1
/// vanishing-derivative limits at 0.
CheckReport verify_derivative_identity(int k, const std::vector<Rational>& points, mpfr_prec_t fd_prec = 256);

}  // namespace kuc::family
