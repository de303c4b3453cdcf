// kuc: exact-arithmetic verification CLI for the k-union-closed toolkit.
#include "kuc/analysis.hpp"
#include "kuc/constants.hpp"
#include "kuc/polyfamily.hpp"
#include "kuc/simulate.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace kuc;

namespace {

struct Output {
    std::string format = "text";
    std::string path;
    bool no_timestamp = false;
    json config;
    json body = json::object();
    std::ostringstream text;
    std::ostringstream csv;

    int exit_status = 0;

    void absorb(const CheckReport& rep) {
        if (rep.status == CheckStatus::fail) exit_status = 1;
        if (rep.status == CheckStatus::inconclusive && exit_status == 0) exit_status = 2;
        text << render_text(rep);
        json w = json::array();
        for (const auto& wit : rep.witnesses) {
            json item = {{"expr", wit.expr}, {"value", wit.value}};
            if (wit.precision_bits) item["precision_bits"] = wit.precision_bits;
            w.push_back(item);
        }
        json r = {{"claim_id", rep.claim_id},
                  {"anchor", rep.anchor},
                  {"status", to_string(rep.status)},
                  {"witnesses", w}};
        if (rep.seed) r["seed"] = *rep.seed;
        if (rep.precision_bits) r["precision_bits"] = rep.precision_bits;
        if (!body.contains("reports")) body["reports"] = json::array();
        body["reports"].push_back(r);
    }

    void emit() {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                std::cerr << "cannot open output file: " << path << "\n";
                exit_status = 3;
                return;
            }
            os = &file;
        }
        if (format == "json") {
            json doc;
            doc["schema_version"] = 1;
            doc["tool"] = "kuc";
            doc["config"] = config;
            for (auto& [key, value] : body.items()) doc[key] = value;
            *os << doc.dump(2) << "\n";
        } else if (format == "csv") {
            *os << "# config: " << config.dump() << "\n" << csv.str();
        } else {
            *os << "config: " << config.dump() << "\n" << text.str();
        }
    }
};

mpfr_prec_t parse_prec(double raw) {
    if (raw <= 0) throw CLI::ValidationError("--prec must be positive");
    if (raw < 1.0) {
        double bits = std::ceil(-std::log2(raw)) + 8;
        return static_cast<mpfr_prec_t>(bits);
    }
    return static_cast<mpfr_prec_t>(raw);
}

std::string iso_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::string interval_string(const MpfrInterval& v, int digits) { return v.mid_string(digits); }

json interval_json(const MpfrInterval& v, int digits) {
    return json{{"mid", v.mid_string(digits)},
                {"lo", v.lo_string(digits)},
                {"hi", v.hi_string(digits)},
                {"precision_bits", static_cast<long>(v.precision())}};
}

Rational parse_rational_or_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return rational_from_string(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    unsigned long frac_len = s.size() - dot - 1;
    Rational q = rational_from_string(digits);
    return q / Rational(integer_pow(Integer(10), frac_len));
}

std::vector<Rational> parse_points(const std::string& csv_list) {
    std::vector<Rational> pts;
    std::stringstream ss(csv_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) pts.push_back(rational_from_string(item));
    }
    return pts;
}

json sim_json(const sim::SimReport& rep) {
    json j;
    j["n"] = rep.spec.n;
    j["k"] = rep.spec.k;
    j["t1"] = rep.spec.t1;
    j["t2"] = rep.spec.t2;
    j["degenerate"] = rep.degenerate;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    if (rep.closure_halfwidth > 0) {
        j["closure_fraction"] = rep.closure_fraction;
        j["closure_halfwidth_99"] = rep.closure_halfwidth;
        j["mean_union_size"] = rep.mean_union_size;
        j["union_threshold"] = rep.union_threshold;
    }
    if (rep.frequency_halfwidth > 0) {
        j["element_frequency"] = rep.element_frequency;
        j["frequency_halfwidth_99"] = rep.frequency_halfwidth;
    }
    j["exact_frequency"] = rep.exact_frequency;
    j["f2_weight"] = rep.f2_weight;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for k-union-closed set system computations"};
    app.require_subcommand(1);

    Output out;
    double prec_raw = 128;
    if (const char* env = std::getenv("KUC_PREC")) prec_raw = std::atof(env);
    std::uint64_t seed = 20240817;

    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output,-o", out.path, "write output to a file");
    app.add_flag("--no-timestamp", out.no_timestamp, "omit the timestamp from the embedded config");
    app.add_option("--prec", prec_raw, "working precision: bits, or a tolerance < 1 (e.g. 1e-6)");
    app.add_option("--seed", seed, "seed for stochastic commands");

    auto* cmd_table = app.add_subcommand("table", "constants table (phi, psi, z, alpha, mu)");
    long table_kmax = 8;
    std::vector<long> table_ks;
    cmd_table->add_option("--kmax", table_kmax, "cover k = 2..kmax (plus 16 when kmax >= 8)");
    cmd_table->add_option("--k", table_ks, "explicit k values (repeatable, overrides --kmax)");

    auto* cmd_poly = app.add_subcommand("poly", "build p_k and verify the generator identities");
    int poly_k = 3;
    std::string poly_points = "3/10";
    cmd_poly->add_option("--k", poly_k, "family index")->check(CLI::Range(2, 16));
    cmd_poly->add_option("--points", poly_points, "comma-separated rational sample points in (0,1)");

    auto* cmd_roots = app.add_subcommand("roots", "real-root counts of p_k in (0,1)");
    int roots_k = 0;
    long roots_kmax = 0;
    bool roots_pattern = false;
    cmd_roots->add_option("--k", roots_k, "single family index");
    cmd_roots->add_option("--kmax", roots_kmax, "range 2..kmax");
    cmd_roots->add_flag("--pattern", roots_pattern, "also count roots of every derivative over R");

    auto* cmd_disc = app.add_subcommand("discriminants", "discriminant sign pattern of the derivative tower");
    int disc_k = 4;
    cmd_disc->add_option("--k", disc_k, "family index")->check(CLI::Range(2, 8));

    auto* cmd_fk = app.add_subcommand("verify-fk", "nonnegativity of f_k on [0,1]");
    int fk_k = 0;
    long fk_kmax = 0;
    long fk_grid = 100000;
    double fk_exclusion = 1e-3;
    cmd_fk->add_option("--k", fk_k, "single family index");
    cmd_fk->add_option("--kmax", fk_kmax, "range 2..kmax");
    cmd_fk->add_option("--grid", fk_grid, "heuristic grid size")->check(CLI::PositiveNumber);
    cmd_fk->add_option("--exclusion", fk_exclusion, "radius excluded around the zeros {0, phi, 1}");

    auto* cmd_m = app.add_subcommand("verify-m", "entropy product inequalities and the M_k minimum");
    int m_k = 3;
    long m_samples = 100000;
    double m_tol = 1e-7;
    cmd_m->add_option("--k", m_k, "family index")->check(CLI::Range(2, 8));
    cmd_m->add_option("--samples", m_samples, "sample count");
    cmd_m->add_option("--tol", m_tol, "minimum-value tolerance");

    auto* cmd_app = app.add_subcommand("verify-appendix", "replicate the k=4 derivative analysis (and k=3 checks)");
    int app_k = 4;
    cmd_app->add_option("--k", app_k, "must be 4");

    auto* cmd_const = app.add_subcommand("verify-constants", "z_k and mu_k propositions over a k range");
    long const_kmax = 1000;
    cmd_const->add_option("--kmax", const_kmax, "check all k up to kmax")->check(CLI::PositiveNumber);

    auto* cmd_ent = app.add_subcommand("verify-entropy-lemma", "union entropy bound on exhaustive small instances");
    int ent_n = 3, ent_k = 2;
    long ent_trials = 10000;
    cmd_ent->add_option("--n", ent_n, "bits per variable (<= 4)")->check(CLI::Range(1, 4));
    cmd_ent->add_option("--k", ent_k, "variables (<= 3)")->check(CLI::Range(2, 3));
    cmd_ent->add_option("--trials", ent_trials, "random instances");

    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo closure fraction and element frequency");
    long sim_n = 2000, sim_trials = 100000;
    int sim_k = 3;
    bool sim_exhaustive = false;
    cmd_sim->add_option("--n", sim_n, "ground set size")->check(CLI::PositiveNumber);
    cmd_sim->add_option("--k", sim_k, "union order")->check(CLI::Range(2, 16));
    cmd_sim->add_option("--trials", sim_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    cmd_sim->add_flag("--exhaustive", sim_exhaustive, "also run the exhaustive oracle (n <= 20, k = 2)");

    auto* cmd_bound = app.add_subcommand("bound", "frequency bound: constant minus the approximation penalty");
    int bound_k = 3;
    std::string bound_eps = "0";
    long bound_family = 1024;
    cmd_bound->add_option("--k", bound_k, "union order")->check(CLI::Range(2, 64));
    cmd_bound->add_option("--eps", bound_eps, "approximation slack in [0, 1/2), rational or decimal");
    cmd_bound->add_option("--family-size", bound_family, "family cardinality |F| >= 2");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    mpfr_prec_t prec = parse_prec(prec_raw);
    const int digits = std::max(6, static_cast<int>(static_cast<double>(prec) * 0.30103) - 2);

    out.config["command"] = app.get_subcommands().front()->get_name();
    out.config["format"] = out.format;
    out.config["precision_bits"] = static_cast<long>(prec);
    out.config["seed"] = seed;
    if (!out.no_timestamp) out.config["timestamp"] = iso_now();

    try {
        if (cmd_table->parsed()) {
            std::vector<long> ks = table_ks;
            if (ks.empty()) {
                for (long k = 2; k <= table_kmax; ++k) ks.push_back(k);
                if (table_kmax >= 8 && table_kmax < 16) ks.push_back(16);
            }
            out.config["kmax"] = table_kmax;
            auto rows = constants::table1(ks, prec);
            out.body["rows"] = json::array();
            out.csv << "k,phi,psi,z,alpha,mu\n";
            out.text << std::left << std::setw(6) << "k" << std::setw(14) << "phi" << std::setw(14) << "psi"
                     << std::setw(14) << "z" << std::setw(14) << "alpha" << std::setw(14) << "mu" << "\n";
            for (const auto& r : rows) {
                json row;
                row["k"] = r.k;
                row["phi"] = interval_json(r.phi, digits);
                row["psi"] = interval_json(r.psi, digits);
                row["z"] = interval_json(r.z, digits);
                row["alpha"] = interval_json(r.alpha, digits);
                row["mu"] = interval_json(r.mu, digits);
                out.body["rows"].push_back(row);
                out.csv << r.k << "," << interval_string(r.phi, digits) << "," << interval_string(r.psi, digits)
                        << "," << interval_string(r.z, digits) << "," << interval_string(r.alpha, digits) << ","
                        << interval_string(r.mu, digits) << "\n";
                out.text << std::left << std::setw(6) << r.k << std::setw(14) << interval_string(r.phi, 10)
                         << std::setw(14) << interval_string(r.psi, 10) << std::setw(14)
                         << interval_string(r.z, 10) << std::setw(14) << interval_string(r.alpha, 10)
                         << std::setw(14) << interval_string(r.mu, 10) << "\n";
            }
        } else if (cmd_poly->parsed()) {
            out.config["k"] = poly_k;
            out.config["points"] = poly_points;
            auto ctx = PhiContext::create(poly_k);
            PolyA p = family::build_p(poly_k, ctx);
            json coeffs = json::array();
            for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                const auto& c = p.coeffs[i].coords();
                json item;
                item["degree"] = i;
                item["a"] = c[0].get_str();
                item["b"] = c[c.size() - 1].get_str();  // alpha coordinate
                coeffs.push_back(item);
                if (c[0] != 0 || c[c.size() - 1] != 0)
                    out.text << "x^" << i << ": " << p.coeffs[i].to_string() << "\n";
                out.csv << i << "," << c[0].get_str() << "," << c[c.size() - 1].get_str() << "\n";
            }
            out.body["p_k"] = coeffs;
            out.absorb(family::check_structure(poly_k));
            if (family::has_reference_poly(poly_k)) out.absorb(family::check_table_match(poly_k));
            out.absorb(family::check_p0_sign(poly_k));
            out.absorb(family::check_sigma_sign_remark(poly_k));
            out.absorb(family::verify_derivative_identity(poly_k, parse_points(poly_points)));
        } else if (cmd_roots->parsed()) {
            std::vector<int> ks;
            if (roots_k >= 2) ks.push_back(roots_k);
            for (long k = 2; k <= roots_kmax; ++k) ks.push_back(static_cast<int>(k));
            if (ks.empty()) ks = {2, 3, 4};
            out.body["counts"] = json::array();
            for (int k : ks) {
                auto counts = family::unit_interval_root_count(k);
                json item = {{"k", k}, {"distinct", counts.first}, {"with_multiplicity", counts.second}};
                out.text << "k=" << k << ": " << counts.first << " distinct, " << counts.second
                         << " with multiplicity in (0,1)\n";
                out.csv << k << "," << counts.first << "," << counts.second << "\n";
                CheckReport rep("unit-roots-k" + std::to_string(k), "p_k has two real roots in (0,1)");
                rep.require(counts.first == 2 && counts.second == 2, "counts",
                            std::to_string(counts.first) + "," + std::to_string(counts.second));
                if (roots_pattern) {
                    auto pattern = family::derivative_root_pattern(k);
                    json pj = json::array();
                    std::ostringstream ps;
                    for (std::size_t i = 0; i < pattern.size(); ++i) {
                        pj.push_back(pattern[i]);
                        ps << (i ? "," : "") << pattern[i];
                    }
                    item["derivative_pattern"] = pj;
                    out.text << "  derivative pattern: (" << ps.str() << ")\n";
                    rep.note("derivative pattern", ps.str());
                }
                out.body["counts"].push_back(item);
                out.absorb(rep);
            }
        } else if (cmd_disc->parsed()) {
            out.config["k"] = disc_k;
            auto pattern = family::discriminant_sign_pattern(disc_k);
            std::ostringstream ps;
            json pj = json::array();
            for (std::size_t i = 0; i < pattern.size(); ++i) {
                ps << (i ? "," : "") << (pattern[i] > 0 ? "+" : (pattern[i] < 0 ? "-" : "0"));
                pj.push_back(pattern[i]);
                out.csv << i << "," << pattern[i] << "\n";
            }
            out.body["discriminant_signs"] = pj;
            out.text << "discriminant sign pattern: (" << ps.str() << ")\n";
            if (disc_k == 4) {
                CheckReport rep("prop-3.13-disc-pattern", "discriminant signs of the p_4 tower");
                std::vector<int> want = {1, 1, -1, -1, -1, 1, -1, -1, -1, 1, -1, -1, -1, 0, 1};
                rep.require(pattern == want, "pattern", ps.str());
                out.absorb(rep);
            }
        } else if (cmd_fk->parsed()) {
            std::vector<int> ks;
            if (fk_k >= 2) ks.push_back(fk_k);
            for (long k = 2; k <= fk_kmax; ++k) ks.push_back(static_cast<int>(k));
            if (ks.empty()) ks = {2, 3, 4};
            out.config["grid"] = fk_grid;
            out.config["exclusion"] = fk_exclusion;
            for (int k : ks) {
                analysis::FkOptions opt;
                opt.grid_size = fk_grid;
                std::ostringstream excl;
                excl << std::setprecision(17) << fk_exclusion;
                opt.exclusion_radius = rational_from_string(
                    std::to_string(static_cast<long>(fk_exclusion * 1e9)) + "/1000000000");
                opt.grid_prec = prec;
                if (out.format == "csv") {
                    auto ctx = PhiContext::create(k);
                    MpfrInterval alpha = entropy::alpha_interval(ctx, prec);
                    for (long i = 0; i <= fk_grid; ++i) {
                        Rational x = make_rational(i, fk_grid);
                        double v = (x == 0 || x == 1)
                                       ? 0.0
                                       : entropy::f_k_interval(k, MpfrInterval::from_rational(x, prec), alpha)
                                             .mid_double();
                        out.csv << k << "," << to_decimal_string(x, 8) << "," << std::setprecision(17) << v
                                << "\n";
                    }
                }
                out.absorb(analysis::verify_fk_nonneg(k, opt));
            }
        } else if (cmd_m->parsed()) {
            out.config["k"] = m_k;
            out.config["samples"] = m_samples;
            out.absorb(analysis::verify_lemma_cl(m_samples, seed, prec));
            out.absorb(analysis::verify_corollary_main(m_k, std::max(1L, m_samples / 10), seed + 1, prec));
            out.absorb(analysis::verify_minimize_m_k(m_k, m_tol, seed + 2));
        } else if (cmd_app->parsed()) {
            if (app_k != 4) throw CLI::ValidationError("--k", "verify-appendix supports --k 4 only");
            out.config["k"] = app_k;
            for (auto& rep : family::verify_appendix(4)) out.absorb(rep);
        } else if (cmd_const->parsed()) {
            out.config["kmax"] = const_kmax;
            out.absorb(constants::verify_prop_zk(const_kmax, prec));
            out.absorb(constants::verify_lemma_mu(const_kmax));
        } else if (cmd_ent->parsed()) {
            out.config["n"] = ent_n;
            out.config["k"] = ent_k;
            out.config["trials"] = ent_trials;
            out.absorb(analysis::verify_lemma_main_small(ent_n, ent_k, ent_trials, seed, prec));
        } else if (cmd_sim->parsed()) {
            out.config["n"] = sim_n;
            out.config["k"] = sim_k;
            out.config["trials"] = sim_trials;
            sim::FamilySpec spec = sim::FamilySpec::create(sim_n, sim_k);
            sim::SimReport closure = sim::estimate_closure_fraction(spec, sim_trials, seed);
            sim::SimReport freq = sim::estimate_element_frequency(spec, sim_trials, seed + 1);
            out.body["closure"] = sim_json(closure);
            out.body["frequency"] = sim_json(freq);
            out.text << "family n=" << spec.n << " k=" << spec.k << " t1=" << spec.t1 << " t2=" << spec.t2
                     << (spec.degenerate ? " (degenerate strata)" : "") << "\n";
            out.text << "closure fraction: " << closure.closure_fraction << " +- " << closure.closure_halfwidth
                     << " (mean union size " << closure.mean_union_size << ", threshold "
                     << closure.union_threshold << ")\n";
            out.text << "element frequency: " << freq.element_frequency << " +- " << freq.frequency_halfwidth
                     << " (exact companion " << freq.exact_frequency << ")\n";
            for (const auto& [size, count] : closure.union_histogram) out.csv << size << "," << count << "\n";
            if (sim_exhaustive) {
                Rational exact = sim::exact_closure_fraction(spec);
                out.body["exhaustive_closure"] = exact.get_d();
                out.text << "exhaustive closure fraction: " << exact.get_d() << "\n";
                CheckReport rep("prop-2.1-exhaustive", "Monte Carlo closure agrees with exhaustive enumeration");
                rep.seed = seed;
                rep.require(std::abs(closure.closure_fraction - exact.get_d()) <= closure.closure_halfwidth,
                            "|mc - exact| <= halfwidth",
                            std::to_string(closure.closure_fraction) + " vs " + std::to_string(exact.get_d()));
                out.absorb(rep);
            }
        } else if (cmd_bound->parsed()) {
            out.config["k"] = bound_k;
            out.config["eps"] = bound_eps;
            out.config["family_size"] = bound_family;
            constants::BoundQuery q;
            q.k = bound_k;
            q.eps = parse_rational_or_decimal(bound_eps);
            q.family_size = bound_family;
            constants::BoundResult r = constants::frequency_bound(q, prec);
            json j = {{"delta", r.delta},
                      {"guaranteed_fraction", r.guaranteed_fraction},
                      {"constant", r.constant},
                      {"constant_value", r.constant_value},
                      {"clamped", r.clamped}};
            out.body["bound"] = j;
            out.text << "delta = " << std::setprecision(12) << r.delta << "\n"
                     << "constant (" << r.constant << ") = " << r.constant_value << "\n"
                     << "guaranteed fraction = " << r.guaranteed_fraction << (r.clamped ? " (clamped)" : "")
                     << "\n";
            out.csv << r.delta << "," << r.guaranteed_fraction << "," << r.constant << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    out.emit();
    return out.exit_status;
}
