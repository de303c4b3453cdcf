#pragma once

#include "kuc/phi.hpp"
#include "kuc/real.hpp"
#include "kuc/report.hpp"

#include <vector>

namespace kuc::constants {

/// Certified enclosure of phi_k by interval bisection in MPFR; handles
/// large k (the rational-endpoint path in refine_phi is preferable for
/// small k, this one for k up to 2^20 and beyond).
MpfrInterval phi_interval(long k, mpfr_prec_t prec = 128);

/// mu_k: 1/alpha_k for k <= 4, the binary-split phi-power average for
/// k >= 5 (phi = phi_2 throughout the formula). Exact rational-interval
/// arithmetic inside, outward conversion at the end.
MpfrInterval mu(long k, mpfr_prec_t prec = 128);

/// z_k = 1 - mu_k^{1/(1-k)}.
MpfrInterval z(long k, mpfr_prec_t prec = 128);

struct ConstantsRow {
    long k = 0;
    MpfrInterval phi, psi, z, alpha, mu;
};

ConstantsRow row(long k, mpfr_prec_t prec = 128);
std::vector<ConstantsRow> table1(const std::vector<long>& ks, mpfr_prec_t prec = 128);

/// z_k > log k/(3k); 1/2 < z_k/psi_k <= 1 (equality consistent for
/// k <= 4, strict below for k >= 5); psi_k bracket for k >= 3; mu_k
/// nondecreasing; large-k ratio limit log(1/phi)/log 2 at k = 2^20.
CheckReport verify_prop_zk(long kmax, mpfr_prec_t prec = 128);

/// mu_{k-1}/mu_k > (k-1)/k for 3 <= k <= kmax, fully exact rational
/// interval certificates.
CheckReport verify_lemma_mu(long kmax);

struct BoundQuery {
    int k = 2;
    Rational eps;         // in [0, 1/2)
    Integer family_size;  // >= 2
};

struct BoundResult {
    double delta = 0;
    double guaranteed_fraction = 0;
    bool clamped = false;     // fraction clipped at zero
    std::string constant;     // "psi_k" for k <= 4, "z_k" otherwise
    double constant_value = 0;
};

/// delta = (k eps + 2 eps log(1/eps) / log |F|)^{1/(k-1)} (natural logs);
/// guaranteed fraction = constant - delta, clamped at zero.
BoundResult frequency_bound(const BoundQuery& q, mpfr_prec_t prec = 128);

}  // namespace kuc::constants
