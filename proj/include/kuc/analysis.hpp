#pragma once

#include "kuc/entropy.hpp"
#include "kuc/report.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace kuc::analysis {

struct FkOptions {
    long grid_size = 100000;
    Rational exclusion_radius = make_rational(1, 1000);
    mpfr_prec_t grid_prec = 128;
    mpfr_prec_t cert_prec = 256;
    int depth_cap = 48;
};

/// Two layers: heuristic grid minimum of f_k over [0,1] (must be
/// >= -1e-12), and certified interval positivity on [0,1] minus
/// exclusion_radius-neighborhoods of the zeros {0, phi_k, 1}, by adaptive
/// bisection. Cells that hit the depth cap are reported as inconclusive,
/// not failure. Also certifies |f_k(phi_k)| < 1e-20 at cert_prec and
/// reports an empirical positivity radius near 0.
CheckReport verify_fk_nonneg(int k, const FkOptions& opt = {});

/// h(xy) >= (x h(y) + y h(x)) / (2 phi) over [0,1]^2, sampled (seeded dyadic
/// points plus adversarial corners/edges/near-tight points); a violation
/// must be certified by outward intervals to count.
CheckReport verify_lemma_cl(long samples, std::uint64_t seed, mpfr_prec_t prec = 128);

/// h(prod x_i) >= (mu_k/k) sum_i h(x_i) prod_{j != i} x_j over [0,1]^k.
CheckReport verify_corollary_main(int k, long samples, std::uint64_t seed, mpfr_prec_t prec = 128);

struct MinimizeResult {
    std::vector<double> point;
    double value = 0;
    double mu_over_k = 0;
    double descent_best = 0;  // best value seen by the multistart descent
};

/// Multistart Nelder-Mead descent plus a dense diagonal scan of F_k(t)/k;
/// the returned point is the best found. Checks value >= mu_k/k - tolerance
/// and diagonality of the minimizer (non-1 coordinates equal within 1e-6).
MinimizeResult minimize_m_k(int k, double tolerance, std::uint64_t seed);
CheckReport verify_minimize_m_k(int k, double tolerance, std::uint64_t seed);

/// k mutually independent variables over {0,1}^n with exact rational laws.
struct JointDistribution {
    int n = 1;
    int k = 2;
    std::vector<std::vector<Rational>> marginals;  // k rows of 2^n probabilities, each sums to 1
    bool product_form = true;

    static JointDistribution random(int n, int k, std::mt19937_64& rng);

    MpfrInterval variable_entropy(int j, mpfr_prec_t prec = 128) const;
    /// Entropy of the coordinatewise-OR variable (exact pushforward law).
    MpfrInterval union_entropy(mpfr_prec_t prec = 128) const;
    /// p = min over variables j and bit positions i of Pr[bit i of A_j = 0].
    Rational min_zero_marginal() const;
};

/// H(OR of A_j) >= p^{k-1} (mu_k / k) sum_j H(A_j) over random product
/// instances with exhaustively computed entropies (n <= 4, k <= 3).
CheckReport verify_lemma_main_small(int n, int k, long trials, std::uint64_t seed, mpfr_prec_t prec = 128);

}  // namespace kuc::analysis
