#include "kuc/analysis.hpp"

#include "kuc/constants.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <sstream>

namespace kuc::analysis {

namespace {

Rational dyadic_unit(std::mt19937_64& rng, int bits = 30) {
    return make_rational(static_cast<long>(rng() >> (64 - bits)), 1L << bits);
}

}  // namespace

CheckReport verify_fk_nonneg(int k, const FkOptions& opt) {
    if (k < 2) throw std::invalid_argument("f_k requires k >= 2");
    if (opt.grid_size < 1000) throw std::invalid_argument("grid_size must be at least 1000");
    if (sgn(opt.exclusion_radius) <= 0) throw std::invalid_argument("exclusion_radius must be positive");
    CheckReport rep("fk-nonneg-k" + std::to_string(k),
                    "f_k >= 0 on [0,1]: grid minimum plus certified positivity away from the zeros");
    rep.precision_bits = static_cast<unsigned long>(opt.cert_prec);
    auto ctx = PhiContext::create(k)->refined(96);

    // layer (a): heuristic grid
    {
        MpfrInterval alpha = entropy::alpha_interval(ctx, opt.grid_prec);
        double min_val = 0;
        Rational min_at(0);
        for (long i = 0; i <= opt.grid_size; ++i) {
            Rational x = make_rational(i, opt.grid_size);
            MpfrInterval xs = MpfrInterval::from_rational(x, opt.grid_prec);
            double v;
            if (x == 0 || x == 1) {
                v = 0.0;
            } else {
                v = entropy::f_k_interval(k, xs, alpha).mid_double();
            }
            if (v < min_val) {
                min_val = v;
                min_at = x;
            }
        }
        rep.note("grid points", std::to_string(opt.grid_size + 1));
        rep.note("grid minimum", std::to_string(min_val) + " at x = " + min_at.get_str(),
                 static_cast<unsigned long>(opt.grid_prec));
        rep.require(min_val >= -1e-12, "grid min >= -1e-12", std::to_string(min_val));
    }

    // layer (b): certified positivity outside the excluded neighborhoods
    {
        MpfrInterval alpha = entropy::alpha_interval(ctx, opt.cert_prec);
        const Rational& r = opt.exclusion_radius;
        const IntervalValue& phi_box = ctx->enclosure();
        std::vector<std::pair<Rational, Rational>> regions = {
            {r, phi_box.lo - r},
            {phi_box.hi + r, Rational(1) - r},
        };
        long cells_certified = 0, cells_inconclusive = 0;
        bool disproved = false;
        Rational width_floor = dyadic_eps(static_cast<unsigned long>(opt.depth_cap));
        for (auto& [a, b] : regions) {
            if (a >= b) continue;
            std::vector<std::pair<Rational, Rational>> stack{{a, b}};
            while (!stack.empty()) {
                auto [lo, hi] = stack.back();
                stack.pop_back();
                MpfrInterval cell = MpfrInterval::from_rat_interval(IntervalValue(lo, hi), opt.cert_prec);
                MpfrInterval val = entropy::f_k_interval(k, cell, alpha);
                int s = val.certified_sign();
                if (s > 0) {
                    ++cells_certified;
                    continue;
                }
                if (s < 0) {
                    disproved = true;
                    rep.require(false, "f_k certified negative on cell",
                                "[" + lo.get_str() + ", " + hi.get_str() + "]");
                    break;
                }
                if (hi - lo <= width_floor) {
                    ++cells_inconclusive;
                    rep.note("inconclusive cell (depth cap)", "[" + lo.get_str() + ", " + hi.get_str() + "]");
                    continue;
                }
                Rational mid = (lo + hi) / 2;
                stack.push_back({lo, mid});
                stack.push_back({mid, hi});
            }
            if (disproved) break;
        }
        rep.note("certified cells", std::to_string(cells_certified));
        rep.note("exclusion radius", r.get_str());
        rep.note("excluded neighborhoods of {0, phi, 1}", "heuristic grid coverage only (f_k vanishes there)");
        if (cells_inconclusive > 0 && !disproved) {
            rep.mark_inconclusive();
            rep.note("inconclusive cells", std::to_string(cells_inconclusive));
        }
    }

    // |f_k(phi_k)| at cert_prec: the double zero sits inside the enclosure
    {
        MpfrInterval at_phi = entropy::f_k_at_phi(k, ctx, opt.cert_prec);
        double mag = at_phi.mag_double();
        rep.note("f_k over phi enclosure", at_phi.to_string(6), static_cast<unsigned long>(opt.cert_prec));
        rep.require(mag < 1e-20, "|f_k(phi_k)| < 1e-20", std::to_string(mag));
    }

    // empirical positivity radius near 0 (reported, not asserted):
    // smallest dyadic 2^-j with f_k certified positive on [2^-j, 2r]
    {
        const Rational two_r = opt.exclusion_radius * 2;
        MpfrInterval alpha = entropy::alpha_interval(ctx, opt.cert_prec);
        Rational found(0);
        for (unsigned long j = 4; j <= 64; j *= 2) {
            Rational lo = dyadic_eps(j);
            if (lo >= two_r) continue;
            MpfrInterval cell = MpfrInterval::from_rat_interval(IntervalValue(lo, two_r), opt.cert_prec);
            if (entropy::f_k_interval(k, cell, alpha).certified_sign() > 0) {
                found = lo;
                break;
            }
        }
        rep.note("positivity certified on [eps, 2r] with eps", found == 0 ? "none found" : found.get_str());
    }
    return rep;
}

CheckReport verify_lemma_cl(long samples, std::uint64_t seed, mpfr_prec_t prec) {
    CheckReport rep("lemma-4.1-entropy-product",
                    "h(xy) >= (x h(y) + y h(x)) / (2 phi) on [0,1]^2, sampled with certified intervals");
    rep.seed = seed;
    rep.precision_bits = static_cast<unsigned long>(prec);
    std::mt19937_64 rng(seed);

    IntervalValue phi2 = refine_phi(2, dyadic_eps(static_cast<unsigned long>(prec) + 8));
    MpfrInterval inv_two_phi =
        MpfrInterval::from_long(1, prec) / (MpfrInterval::from_long(2, prec) * MpfrInterval::from_rat_interval(phi2, prec));

    long violations = 0, undecided = 0;
    double min_slack = 1e300;
    Rational worst_x(0), worst_y(0);

    Rational phi_mid = IntervalValue(phi2).midpoint();
    std::vector<std::pair<Rational, Rational>> points = {
        {Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)},
        {Rational(1), make_rational(1, 2)}, {phi_mid, phi_mid}, {make_rational(1, 2), make_rational(1, 2)},
    };
    for (long i = 0; i < samples; ++i) points.emplace_back(dyadic_unit(rng), dyadic_unit(rng));

    for (const auto& [x, y] : points) {
        MpfrInterval hxy = entropy::h_point(x * y, prec);
        MpfrInterval rhs =
            inv_two_phi * (MpfrInterval::from_rational(x, prec) * entropy::h_point(y, prec) +
                           MpfrInterval::from_rational(y, prec) * entropy::h_point(x, prec));
        if (hxy.certified_below(rhs)) {
            ++violations;
            rep.require(false, "violation at (x,y)", x.get_str() + ", " + y.get_str());
            continue;
        }
        MpfrInterval slack = hxy - rhs;
        double s = slack.lo_double();
        if (s < min_slack) {
            min_slack = s;
            worst_x = x;
            worst_y = y;
        }
        if (slack.contains_zero() && !(hxy.is_exact_zero() && rhs.is_exact_zero())) ++undecided;
    }
    rep.note("samples", std::to_string(points.size()));
    rep.note("min certified slack", std::to_string(min_slack) + " at (" + worst_x.get_str() + ", " + worst_y.get_str() + ")");
    rep.note("near-equality points (uncertified sign of slack)", std::to_string(undecided));
    rep.require(violations == 0, "violations", std::to_string(violations));
    return rep;
}

CheckReport verify_corollary_main(int k, long samples, std::uint64_t seed, mpfr_prec_t prec) {
    CheckReport rep("corollary-4.6-k" + std::to_string(k),
                    "h(prod x) >= (mu_k/k) sum_i h(x_i) prod_{j!=i} x_j on [0,1]^k, sampled");
    rep.seed = seed;
    rep.precision_bits = static_cast<unsigned long>(prec);
    std::mt19937_64 rng(seed);

    MpfrInterval mu_over_k = constants::mu(k, prec) / MpfrInterval::from_long(k, prec);

    long violations = 0, undecided = 0;
    double min_slack = 1e300;

    auto check_point = [&](const std::vector<Rational>& xs) {
        Rational prod(1);
        for (const auto& x : xs) prod *= x;
        MpfrInterval lhs = entropy::h_point(prod, prec);
        MpfrInterval rhs = MpfrInterval::exact_zero(prec);
        for (int i = 0; i < k; ++i) {
            Rational other(1);
            for (int j = 0; j < k; ++j)
                if (j != i) other *= xs[static_cast<std::size_t>(j)];
            rhs = rhs + entropy::h_point(xs[static_cast<std::size_t>(i)], prec) *
                            MpfrInterval::from_rational(other, prec);
        }
        rhs = rhs * mu_over_k;
        if (lhs.certified_below(rhs)) {
            ++violations;
            std::ostringstream os;
            for (const auto& x : xs) os << x.get_str() << " ";
            rep.require(false, "violation at point", os.str());
            return;
        }
        MpfrInterval slack = lhs - rhs;
        min_slack = std::min(min_slack, slack.lo_double());
        if (slack.contains_zero() && !(lhs.is_exact_zero() && rhs.is_exact_zero())) ++undecided;
    };

    // boundary and diagonal specials
    {
        std::vector<Rational> zeros(static_cast<std::size_t>(k), make_rational(1, 3));
        zeros[0] = 0;
        check_point(zeros);
        std::vector<Rational> ones(static_cast<std::size_t>(k), make_rational(2, 3));
        ones[static_cast<std::size_t>(k) - 1] = 1;
        check_point(ones);
        for (int d = 1; d <= 9; ++d)
            check_point(std::vector<Rational>(static_cast<std::size_t>(k), make_rational(d, 10)));
    }
    for (long i = 0; i < samples; ++i) {
        std::vector<Rational> xs(static_cast<std::size_t>(k));
        for (auto& x : xs) x = dyadic_unit(rng);
        check_point(xs);
    }
    rep.note("samples", std::to_string(samples + 11));
    rep.note("min certified slack", std::to_string(min_slack));
    rep.note("near-equality points", std::to_string(undecided));
    rep.require(violations == 0, "violations", std::to_string(violations));
    return rep;
}

namespace {

// Compact Nelder-Mead on [lo_clamp, hi_clamp]^d.
std::pair<std::vector<double>, double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                                   std::vector<double> start, double scale, int iters) {
    const std::size_t d = start.size();
    auto clamp = [](std::vector<double>& v) {
        for (auto& x : v) x = std::min(1.0, std::max(0.0, x));
    };
    std::vector<std::pair<double, std::vector<double>>> simplex;
    clamp(start);
    simplex.push_back({f(start), start});
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> v = start;
        v[i] += scale;
        clamp(v);
        simplex.push_back({f(v), v});
    }
    for (int it = 0; it < iters; ++it) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (std::abs(simplex.front().first - simplex.back().first) < 1e-15) break;
        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j + 1 < simplex.size(); ++j) centroid[i] += simplex[j].second[i];
            centroid[i] /= static_cast<double>(d);
        }
        auto& worst = simplex.back();
        std::vector<double> refl(d);
        for (std::size_t i = 0; i < d; ++i) refl[i] = centroid[i] + (centroid[i] - worst.second[i]);
        clamp(refl);
        double fr = f(refl);
        if (fr < simplex.front().first) {
            std::vector<double> exp_(d);
            for (std::size_t i = 0; i < d; ++i) exp_[i] = centroid[i] + 2.0 * (centroid[i] - worst.second[i]);
            clamp(exp_);
            double fe = f(exp_);
            worst = fe < fr ? std::make_pair(fe, exp_) : std::make_pair(fr, refl);
        } else if (fr < simplex[simplex.size() - 2].first) {
            worst = {fr, refl};
        } else {
            std::vector<double> con(d);
            for (std::size_t i = 0; i < d; ++i) con[i] = centroid[i] + 0.5 * (worst.second[i] - centroid[i]);
            clamp(con);
            double fc = f(con);
            if (fc < worst.first) {
                worst = {fc, con};
            } else {
                for (std::size_t j = 1; j < simplex.size(); ++j) {
                    for (std::size_t i = 0; i < d; ++i)
                        simplex[j].second[i] = simplex[0].second[i] + 0.5 * (simplex[j].second[i] - simplex[0].second[i]);
                    simplex[j].first = f(simplex[j].second);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return {simplex.front().second, simplex.front().first};
}

double golden_section_min(const std::function<double(double)>& f, double a, double b, int iters) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

}  // namespace

MinimizeResult minimize_m_k(int k, double tolerance, std::uint64_t seed) {
    (void)tolerance;
    MinimizeResult out;
    auto eval_diag = [&](double t) { return entropy::big_f_k_double(k, t) / k; };

    // dense diagonal scan, then golden-section polish
    double best_t = 0.5, best_v = 1e300;
    const int grid = 4000;
    for (int i = 1; i < grid; ++i) {
        double t = static_cast<double>(i) / grid;
        double v = eval_diag(t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double t_star = golden_section_min(eval_diag, std::max(1e-9, best_t - 2.0 / grid),
                                       std::min(1.0 - 1e-9, best_t + 2.0 / grid), 80);
    double v_star = eval_diag(t_star);

    // multistart descent over the full cube
    std::mt19937_64 rng(seed);
    double descent_best = 1e300;
    std::vector<double> descent_point;
    for (int s = 0; s < 24; ++s) {
        std::vector<double> start(static_cast<std::size_t>(k));
        for (auto& x : start) x = 0.05 + 0.9 * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
        auto [pt, val] = nelder_mead([&](const std::vector<double>& v) { return entropy::m_k_double(v); },
                                     start, 0.15, 600);
        if (val < descent_best) {
            descent_best = val;
            descent_point = pt;
        }
    }

    out.descent_best = descent_best;
    out.mu_over_k = constants::mu(k, 128).mid_double() / k;
    if (descent_best < v_star - 1e-9) {
        out.point = descent_point;
        out.value = descent_best;
    } else {
        out.point.assign(static_cast<std::size_t>(k), t_star);
        out.value = v_star;
    }
    return out;
}

CheckReport verify_minimize_m_k(int k, double tolerance, std::uint64_t seed) {
    CheckReport rep("lemma-4.5-minimum-k" + std::to_string(k),
                    "minimum of M_k sits on the diagonal with value >= mu_k/k - tol");
    rep.seed = seed;
    MinimizeResult res = minimize_m_k(k, tolerance, seed);
    std::ostringstream os;
    for (double c : res.point) os << c << " ";
    rep.note("minimizer", os.str());
    rep.note("value", std::to_string(res.value));
    rep.note("mu_k/k", std::to_string(res.mu_over_k));
    rep.note("descent best (multistart)", std::to_string(res.descent_best));
    rep.require(res.value >= res.mu_over_k - tolerance, "value >= mu_k/k - tol",
                std::to_string(res.value - res.mu_over_k));
    // diagonality of the returned minimizer: non-1 coordinates agree
    double lo = 2.0, hi = -1.0;
    for (double c : res.point)
        if (c < 1.0 - 1e-6) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
    bool diag = (hi < 0) || (hi - lo <= 1e-6);
    rep.require(diag, "minimizer diagonal within 1e-6", std::to_string(hi - lo));
    // the descent must not beat the diagonal by more than tolerance
    rep.require(res.descent_best >= res.value - tolerance, "descent does not undercut the diagonal",
                std::to_string(res.descent_best - res.value));
    return rep;
}

JointDistribution JointDistribution::random(int n, int k, std::mt19937_64& rng) {
    JointDistribution d;
    d.n = n;
    d.k = k;
    const std::size_t atoms = 1UL << n;
    d.marginals.assign(static_cast<std::size_t>(k), std::vector<Rational>(atoms, Rational(0)));
    for (auto& row : d.marginals) {
        Integer total(0);
        std::vector<Integer> w(atoms);
        for (auto& x : w) {
            x = Integer(static_cast<unsigned long>(rng() >> 32));
            total += x;
        }
        if (total == 0) {
            w[0] = 1;
            total = 1;
        }
        for (std::size_t a = 0; a < atoms; ++a) row[a] = make_rational(w[a], total);
    }
    return d;
}

namespace {

MpfrInterval entropy_of(const std::vector<Rational>& probs, mpfr_prec_t prec) {
    MpfrInterval acc = MpfrInterval::exact_zero(prec);
    for (const auto& p : probs) {
        if (p == 0 || p == 1) continue;  // exact zero contribution
        MpfrInterval pi = MpfrInterval::from_rational(p, prec);
        acc = acc - pi * pi.log();
    }
    return acc;
}

}  // namespace

MpfrInterval JointDistribution::variable_entropy(int j, mpfr_prec_t prec) const {
    return entropy_of(marginals[static_cast<std::size_t>(j)], prec);
}

MpfrInterval JointDistribution::union_entropy(mpfr_prec_t prec) const {
    const std::size_t atoms = 1UL << n;
    std::vector<Rational> or_law(atoms, Rational(0));
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        Rational p(1);
        std::size_t orv = 0;
        for (int j = 0; j < k; ++j) {
            p *= marginals[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
            orv |= idx[static_cast<std::size_t>(j)];
        }
        if (p != 0) or_law[orv] += p;
        int pos = k - 1;
        while (pos >= 0) {
            if (++idx[static_cast<std::size_t>(pos)] < atoms) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return entropy_of(or_law, prec);
}

Rational JointDistribution::min_zero_marginal() const {
    Rational best(2);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) {
            Rational zero_prob(0);
            const auto& row = marginals[static_cast<std::size_t>(j)];
            for (std::size_t v = 0; v < row.size(); ++v)
                if (((v >> i) & 1UL) == 0) zero_prob += row[v];
            best = std::min(best, zero_prob);
        }
    }
    return best;
}

CheckReport verify_lemma_main_small(int n, int k, long trials, std::uint64_t seed, mpfr_prec_t prec) {
    if (n > 4 || k > 3) throw std::invalid_argument("exhaustive entropy check limited to n <= 4, k <= 3");
    CheckReport rep("lemma-5.2-n" + std::to_string(n) + "-k" + std::to_string(k),
                    "H(union) >= p^{k-1} (mu_k/k) sum_j H(A_j) over random independent instances");
    rep.seed = seed;
    rep.precision_bits = static_cast<unsigned long>(prec);
    std::mt19937_64 rng(seed);
    MpfrInterval mu_over_k = constants::mu(k, prec) / MpfrInterval::from_long(k, prec);

    long violations = 0, undecided = 0;
    double min_slack = 1e300;

    auto check = [&](const JointDistribution& d) {
        MpfrInterval lhs = d.union_entropy(prec);
        Rational p = d.min_zero_marginal();
        MpfrInterval sum = MpfrInterval::exact_zero(prec);
        for (int j = 0; j < k; ++j) sum = sum + d.variable_entropy(j, prec);
        MpfrInterval rhs =
            MpfrInterval::from_rational(rational_pow(p, static_cast<unsigned long>(k - 1)), prec) * mu_over_k * sum;
        if (lhs.certified_below(rhs)) {
            ++violations;
            rep.require(false, "violation with p", p.get_str());
            return;
        }
        MpfrInterval slack = lhs - rhs;
        min_slack = std::min(min_slack, slack.lo_double());
        if (slack.contains_zero() && !(lhs.is_exact_zero() && rhs.is_exact_zero())) ++undecided;
    };

    // point masses: everything is exactly zero
    {
        JointDistribution d;
        d.n = n;
        d.k = k;
        d.marginals.assign(static_cast<std::size_t>(k),
                           std::vector<Rational>(1UL << n, Rational(0)));
        for (auto& row : d.marginals) row[0] = 1;
        check(d);
    }
    for (long t = 0; t < trials; ++t) check(JointDistribution::random(n, k, rng));

    rep.note("instances", std::to_string(trials + 1));
    rep.note("min certified slack", std::to_string(min_slack));
    rep.note("near-equality instances", std::to_string(undecided));
    rep.require(violations == 0, "violations", std::to_string(violations));
    return rep;
}

}  // namespace kuc::analysis
