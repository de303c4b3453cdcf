#include "kuc/simulate.hpp"

#include "kuc/interval.hpp"
#include "kuc/phi.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kuc::sim {

namespace {

// floor(q * n + n^{2/3}) computed exactly: bracket the cube root of n^2
// by integer Newton, then tighten the rational bracket until the floor is
// unambiguous.
long floor_with_cbrt(const Rational& coef, long n) {
    Integer n2 = Integer(n) * Integer(n);
    Integer root;
    mpz_root(root.get_mpz_t(), n2.get_mpz_t(), 3);  // floor(n^(2/3))
    Rational lo(root), hi(root + 1);
    // refine [lo, hi] around cbrt(n^2) by bisection on r^3 vs n^2
    for (int it = 0; it < 200; ++it) {
        Integer flo = rational_floor(coef * n + lo);
        Integer fhi = rational_floor(coef * n + hi);
        if (flo == fhi) return flo.get_si();
        Rational mid = (lo + hi) / 2;
        if (mid * mid * mid <= Rational(n2))
            lo = mid;
        else
            hi = mid;
    }
    throw std::runtime_error("ambiguous floor in family threshold");
}

}  // namespace

FamilySpec FamilySpec::create(long n, int k) {
    if (k < 2) throw std::invalid_argument("family requires k >= 2");
    if (n < 2) throw std::invalid_argument("family requires n >= 2");
    // psi at the midpoint of a width-1e-9 enclosure
    IntervalValue phi = refine_phi(k, make_rational(1, 1000000000));
    Rational psi = Rational(1) - phi.midpoint();
    FamilySpec spec;
    spec.n = n;
    spec.k = k;
    spec.t1 = floor_with_cbrt(psi, n);
    spec.t2 = rational_floor((Rational(1) - psi) * n).get_si();
    if (spec.t1 <= 0 || spec.t1 > n || spec.t2 <= 0 || spec.t2 > n)
        throw std::invalid_argument("family thresholds out of range at this n");
    spec.degenerate = spec.t1 >= spec.t2;
    return spec;
}

FamilyWeights family_weights(const FamilySpec& spec) {
    FamilyWeights w;
    w.f2_count = 0;
    Integer size_weighted(0);
    for (long j = spec.t2; j <= spec.n; ++j) {
        Integer c = binomial(static_cast<unsigned long>(spec.n), static_cast<unsigned long>(j));
        w.f2_count += c;
        size_weighted += c * j;
    }
    // F1 merges into F2 when t1 >= t2
    w.f1_count = spec.degenerate
                     ? Integer(0)
                     : binomial(static_cast<unsigned long>(spec.n), static_cast<unsigned long>(spec.t1));
    Integer total = w.f1_count + w.f2_count;
    if (total == 0) throw std::logic_error("empty family");
    w.w1 = make_rational(w.f1_count, total);
    w.w2 = make_rational(w.f2_count, total);
    w.expected_size_f2 = w.f2_count == 0 ? Rational(0) : make_rational(size_weighted, w.f2_count);
    return w;
}

MemberSampler::MemberSampler(const FamilySpec& spec, std::uint64_t seed)
    : spec_(spec), weights_(family_weights(spec)), rng_(seed) {
    if (spec.n <= 10000) {
        f2_cumulative.reserve(static_cast<std::size_t>(spec.n - spec.t2 + 1));
        Integer acc(0);
        for (long j = spec.t2; j <= spec.n; ++j) {
            acc += binomial(static_cast<unsigned long>(spec.n), static_cast<unsigned long>(j));
            f2_cumulative.push_back(acc);
        }
    } else {
        // log-space fallback: normalized exp(lchoose(n, j) - max) cumulative
        double n1 = static_cast<double>(spec.n) + 1.0;
        auto lchoose = [&](long j) {
            return std::lgamma(n1) - std::lgamma(static_cast<double>(j) + 1.0) -
                   std::lgamma(n1 - static_cast<double>(j));
        };
        double peak = lchoose(spec.t2);
        double acc = 0;
        f2_log_cumulative.reserve(static_cast<std::size_t>(spec.n - spec.t2 + 1));
        for (long j = spec.t2; j <= spec.n; ++j) {
            acc += std::exp(lchoose(j) - peak);
            f2_log_cumulative.push_back(acc);
        }
        for (auto& v : f2_log_cumulative) v /= acc;
    }
    index_pool_.resize(static_cast<std::size_t>(spec.n));
    std::iota(index_pool_.begin(), index_pool_.end(), 0);
    mask_.assign(static_cast<std::size_t>((spec.n + 63) / 64), 0);
}

bool MemberSampler::stratum_is_f1() {
    if (weights_.f1_count == 0) return false;
    // exact comparison of a 128-bit uniform draw against w1
    Integer r = (Integer(rng_()) << 64) | Integer(rng_());
    Integer threshold = weights_.w1.get_num() * (Integer(1) << 128) / weights_.w1.get_den();
    return r < threshold;
}

long MemberSampler::draw_f2_size() {
    if (!f2_log_cumulative.empty()) {
        double u = static_cast<double>(rng_() >> 11) / 9007199254740992.0;
        auto it = std::upper_bound(f2_log_cumulative.begin(), f2_log_cumulative.end(), u);
        if (it == f2_log_cumulative.end()) --it;
        return spec_.t2 + static_cast<long>(it - f2_log_cumulative.begin());
    }
    const Integer& total = f2_cumulative.back();
    std::size_t bits = mpz_sizeinbase(total.get_mpz_t(), 2);
    while (true) {
        Integer r(0);
        for (std::size_t got = 0; got < bits; got += 64) r = (r << 64) | Integer(rng_());
        r >>= (64 - (bits % 64 == 0 ? 64 : bits % 64));
        if (r >= total) continue;  // rejection keeps the draw exactly uniform
        auto it = std::upper_bound(f2_cumulative.begin(), f2_cumulative.end(), r);
        return spec_.t2 + static_cast<long>(it - f2_cumulative.begin());
    }
}

void MemberSampler::fill_uniform_subset(long size) {
    std::fill(mask_.begin(), mask_.end(), 0);
    long n = spec_.n;
    for (long i = 0; i < size; ++i) {
        long j = i + static_cast<long>(rng_() % static_cast<std::uint64_t>(n - i));
        std::swap(index_pool_[static_cast<std::size_t>(i)], index_pool_[static_cast<std::size_t>(j)]);
        long bit = index_pool_[static_cast<std::size_t>(i)];
        mask_[static_cast<std::size_t>(bit) / 64] |= (1ULL << (static_cast<std::size_t>(bit) % 64));
    }
}

const std::vector<std::uint64_t>& MemberSampler::sample() {
    long size = stratum_is_f1() ? spec_.t1 : draw_f2_size();
    fill_uniform_subset(size);
    return mask_;
}

long MemberSampler::popcount(const std::vector<std::uint64_t>& mask) const {
    long c = 0;
    for (std::uint64_t w : mask) c += __builtin_popcountll(w);
    return c;
}

bool MemberSampler::is_member_size(long size) const {
    return (!spec_.degenerate && size == spec_.t1) || size >= spec_.t2;
}

namespace {

double conf_halfwidth(double p_hat, long trials) {
    double base = 2.576 * std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) / static_cast<double>(trials));
    return std::max(base, 3.0 / static_cast<double>(trials));
}

double psi_double(int k) {
    IntervalValue phi = refine_phi(k, make_rational(1, 1000000000));
    return 1.0 - phi.midpoint().get_d();
}

}  // namespace

SimReport estimate_closure_fraction(const FamilySpec& spec, long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials >= 1 required");
    MemberSampler sampler(spec, seed);
    std::vector<std::uint64_t> acc(static_cast<std::size_t>((spec.n + 63) / 64), 0);
    long closed = 0;
    double union_size_sum = 0;
    std::map<long, long> histogram;
    for (long t = 0; t < trials; ++t) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int j = 0; j < spec.k; ++j) {
            const auto& m = sampler.sample();
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= m[w];
        }
        long usz = sampler.popcount(acc);
        union_size_sum += static_cast<double>(usz);
        ++histogram[usz];
        if (sampler.is_member_size(usz)) ++closed;
    }
    SimReport rep;
    rep.spec = spec;
    rep.trials = trials;
    rep.seed = seed;
    rep.degenerate = spec.degenerate;
    rep.closure_fraction = static_cast<double>(closed) / static_cast<double>(trials);
    rep.closure_halfwidth = conf_halfwidth(rep.closure_fraction, trials);
    rep.f2_weight = sampler.weights().w2.get_d();
    rep.mean_union_size = union_size_sum / static_cast<double>(trials);
    rep.union_threshold = static_cast<double>(spec.n) * (1.0 - psi_double(spec.k));
    const FamilyWeights& w = sampler.weights();
    Rational exact_freq = w.w1 * Rational(spec.t1) + w.w2 * w.expected_size_f2;
    rep.exact_frequency = exact_freq.get_d() / static_cast<double>(spec.n);
    rep.union_histogram.assign(histogram.begin(), histogram.end());
    return rep;
}

SimReport estimate_element_frequency(const FamilySpec& spec, long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials >= 1 required");
    MemberSampler sampler(spec, seed);
    long hits = 0;
    for (long t = 0; t < trials; ++t) {
        const auto& m = sampler.sample();
        if (m[0] & 1ULL) ++hits;  // membership of ground element 1
    }
    SimReport rep;
    rep.spec = spec;
    rep.trials = trials;
    rep.seed = seed;
    rep.degenerate = spec.degenerate;
    rep.element_frequency = static_cast<double>(hits) / static_cast<double>(trials);
    rep.frequency_halfwidth = conf_halfwidth(rep.element_frequency, trials);
    const FamilyWeights& w = sampler.weights();
    Rational exact_freq = w.w1 * Rational(spec.t1) + w.w2 * w.expected_size_f2;
    rep.exact_frequency = exact_freq.get_d() / static_cast<double>(spec.n);
    rep.f2_weight = w.w2.get_d();
    rep.union_threshold = static_cast<double>(spec.n) * (1.0 - psi_double(spec.k));
    return rep;
}

std::vector<std::uint64_t> enumerate_family(const FamilySpec& spec) {
    if (spec.n > 20) throw std::invalid_argument("exhaustive enumeration limited to n <= 20");
    std::vector<std::uint64_t> members;
    const std::uint64_t limit = 1ULL << spec.n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        long size = __builtin_popcountll(s);
        if ((!spec.degenerate && size == spec.t1) || size >= spec.t2) members.push_back(s);
    }
    return members;
}

Rational exact_closure_fraction(const FamilySpec& spec) {
    if (spec.k != 2) throw std::invalid_argument("exhaustive closure oracle implemented for k = 2");
    std::vector<std::uint64_t> members = enumerate_family(spec);
    Integer closed(0);
    for (std::uint64_t a : members)
        for (std::uint64_t b : members) {
            std::uint64_t u = a | b;
            long size = __builtin_popcountll(u);
            if ((!spec.degenerate && size == spec.t1) || size >= spec.t2) closed += 1;
        }
    Integer total = Integer(members.size()) * Integer(members.size());
    return make_rational(closed, total);
}

}  // namespace kuc::sim
