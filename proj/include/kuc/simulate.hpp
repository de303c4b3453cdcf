#pragma once

#include "kuc/rational.hpp"
#include "kuc/report.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace kuc::sim {

/// The two-stratum family over [n]: F1 = sets of size exactly t1 with
/// t1 = floor(psi_k n + n^{2/3}), F2 = sets of size at least
/// t2 = floor((1 - psi_k) n). When t1 >= t2 the strata overlap (small n);
/// the family degenerates to F2 and is flagged, not refused.
struct FamilySpec {
    long n = 0;
    int k = 2;
    long t1 = 0;
    long t2 = 0;
    bool degenerate = false;

    static FamilySpec create(long n, int k);
};

struct FamilyWeights {
    Integer f1_count;  // |F1| (0 when subsumed by F2)
    Integer f2_count;  // |F2|
    Rational w1;
    Rational w2;
    Rational expected_size_f2;  // E[|A| given A in F2]
};

FamilyWeights family_weights(const FamilySpec& spec);

/// Packed-bitmask member sampler, uniform over F1 union F2 (stratified by
/// the exact weights, inverse-CDF over exact binomial tail weights for the
/// F2 size). Deterministic for a fixed seed.
class MemberSampler {
  public:
    MemberSampler(const FamilySpec& spec, std::uint64_t seed);

    const std::vector<std::uint64_t>& sample();
    long popcount(const std::vector<std::uint64_t>& mask) const;
    bool is_member_size(long size) const;
    const FamilyWeights& weights() const { return weights_; }

  private:
    FamilySpec spec_;
    FamilyWeights weights_;
    std::mt19937_64 rng_;
    std::vector<Integer> f2_cumulative;        // exact cumulative C(n, j), n <= 1e4
    std::vector<double> f2_log_cumulative;     // normalized log-space fallback above
    std::vector<long> index_pool_;
    std::vector<std::uint64_t> mask_;

    long draw_f2_size();
    void fill_uniform_subset(long size);
    bool stratum_is_f1();
};

struct SimReport {
    FamilySpec spec;
    long trials = 0;
    std::uint64_t seed = 0;
    double closure_fraction = 0;
    double closure_halfwidth = 0;
    double element_frequency = 0;
    double frequency_halfwidth = 0;
    double exact_frequency = 0;  // strata-expectation companion
    double f2_weight = 0;        // |F2| / |F| exactly
    double mean_union_size = 0;
    double union_threshold = 0;  // n (1 - psi_k)
    bool degenerate = false;
    std::vector<std::pair<long, long>> union_histogram;  // (size, count), closure runs only
};

SimReport estimate_closure_fraction(const FamilySpec& spec, long trials, std::uint64_t seed);
SimReport estimate_element_frequency(const FamilySpec& spec, long trials, std::uint64_t seed);

/// Exact closure fraction by exhaustive enumeration of all k-tuples
/// (feasible for small n and k = 2).
Rational exact_closure_fraction(const FamilySpec& spec);

/// Exhaustive list of member bitmasks (n <= 20 guard).
std::vector<std::uint64_t> enumerate_family(const FamilySpec& spec);

}  // namespace kuc::sim
