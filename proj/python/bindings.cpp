#include "kuc/analysis.hpp"
#include "kuc/constants.hpp"
#include "kuc/polyfamily.hpp"
#include "kuc/simulate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kuc;

namespace {

py::dict interval_dict(const MpfrInterval& v) {
    py::dict d;
    d["mid"] = v.mid_double();
    d["lo"] = v.lo_double();
    d["hi"] = v.hi_double();
    d["mid_str"] = v.mid_string(30);
    return d;
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["claim_id"] = r.claim_id;
    d["anchor"] = r.anchor;
    d["status"] = to_string(r.status);
    py::list w;
    for (const auto& wit : r.witnesses) {
        py::dict item;
        item["expr"] = wit.expr;
        item["value"] = wit.value;
        w.append(item);
    }
    d["witnesses"] = w;
    if (r.seed) d["seed"] = *r.seed;
    return d;
}

py::dict sim_dict(const sim::SimReport& r) {
    py::dict d;
    d["n"] = r.spec.n;
    d["k"] = r.spec.k;
    d["t1"] = r.spec.t1;
    d["t2"] = r.spec.t2;
    d["degenerate"] = r.degenerate;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    d["closure_fraction"] = r.closure_fraction;
    d["closure_halfwidth"] = r.closure_halfwidth;
    d["element_frequency"] = r.element_frequency;
    d["frequency_halfwidth"] = r.frequency_halfwidth;
    d["exact_frequency"] = r.exact_frequency;
    d["f2_weight"] = r.f2_weight;
    d["mean_union_size"] = r.mean_union_size;
    d["union_threshold"] = r.union_threshold;
    return d;
}

Rational rat(const std::string& s) { return rational_from_string(s); }

}  // namespace

PYBIND11_MODULE(_kuc, m) {
    m.doc() = "exact verification toolkit for k-union-closed set system computations";

    m.def(
        "phi",
        [](long k, int prec) { return interval_dict(constants::phi_interval(k, prec)); },
        py::arg("k"), py::arg("prec") = 128, "certified enclosure of the root of x^k + x - 1 in (1/2, 1)");
    m.def(
        "table",
        [](const std::vector<long>& ks, int prec) {
            py::list rows;
            for (const auto& r : constants::table1(ks, prec)) {
                py::dict d;
                d["k"] = r.k;
                d["phi"] = interval_dict(r.phi);
                d["psi"] = interval_dict(r.psi);
                d["z"] = interval_dict(r.z);
                d["alpha"] = interval_dict(r.alpha);
                d["mu"] = interval_dict(r.mu);
                rows.append(d);
            }
            return rows;
        },
        py::arg("ks"), py::arg("prec") = 128);
    m.def(
        "mu", [](long k, int prec) { return interval_dict(constants::mu(k, prec)); }, py::arg("k"),
        py::arg("prec") = 128);
    m.def(
        "z", [](long k, int prec) { return interval_dict(constants::z(k, prec)); }, py::arg("k"),
        py::arg("prec") = 128);
    m.def(
        "bound",
        [](int k, const std::string& eps, long family_size, int prec) {
            constants::BoundQuery q;
            q.k = k;
            q.eps = rat(eps);
            q.family_size = family_size;
            auto r = constants::frequency_bound(q, prec);
            py::dict d;
            d["delta"] = r.delta;
            d["guaranteed_fraction"] = r.guaranteed_fraction;
            d["constant"] = r.constant;
            d["constant_value"] = r.constant_value;
            d["clamped"] = r.clamped;
            return d;
        },
        py::arg("k"), py::arg("eps") = "0", py::arg("family_size") = 1024, py::arg("prec") = 128);

    m.def(
        "h", [](const std::string& x, int prec) { return entropy::h_point(rat(x), prec).mid_double(); },
        py::arg("x"), py::arg("prec") = 128, "extended binary entropy at a rational point (natural log)");
    m.def(
        "f_k",
        [](int k, const std::string& x, int prec) {
            auto ctx = PhiContext::create(k);
            return entropy::f_k_point(k, rat(x), ctx, prec).mid_double();
        },
        py::arg("k"), py::arg("x"), py::arg("prec") = 128);
    m.def(
        "big_f_k",
        [](int k, const std::string& x, int prec) { return entropy::big_f_k(k, rat(x), prec).mid_double(); },
        py::arg("k"), py::arg("x"), py::arg("prec") = 128);
    m.def(
        "m_k",
        [](const std::vector<std::string>& coords, int prec) {
            std::vector<Rational> pt;
            for (const auto& c : coords) pt.push_back(rat(c));
            return entropy::m_k_point(pt, prec).mid_double();
        },
        py::arg("coords"), py::arg("prec") = 128);

    m.def("p_coefficients", [](int k) {
        auto ctx = PhiContext::create(k);
        PolyA p = family::build_p(k, ctx);
        py::list out;
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            const auto& c = p.coeffs[i].coords();
            out.append(py::make_tuple(i, c[0].get_str(), c[c.size() - 1].get_str()));
        }
        return out;
    });
    m.def("unit_interval_root_count", [](int k) {
        auto counts = family::unit_interval_root_count(k);
        return py::make_tuple(counts.first, counts.second);
    });
    m.def("derivative_root_pattern", &family::derivative_root_pattern, py::arg("k"));
    m.def("discriminant_sign_pattern", &family::discriminant_sign_pattern, py::arg("k"));
    m.def("verify_appendix", []() {
        py::list out;
        for (const auto& r : family::verify_appendix(4)) out.append(report_dict(r));
        return out;
    });
    m.def(
        "verify_fk_nonneg",
        [](int k, long grid) {
            analysis::FkOptions opt;
            opt.grid_size = grid;
            return report_dict(analysis::verify_fk_nonneg(k, opt));
        },
        py::arg("k"), py::arg("grid") = 10000);
    m.def(
        "verify_entropy_product",
        [](long samples, std::uint64_t seed) { return report_dict(analysis::verify_lemma_cl(samples, seed)); },
        py::arg("samples") = 10000, py::arg("seed") = 20240817);
    m.def(
        "simulate",
        [](long n, int k, long trials, std::uint64_t seed) {
            auto spec = sim::FamilySpec::create(n, k);
            py::dict d;
            d["closure"] = sim_dict(sim::estimate_closure_fraction(spec, trials, seed));
            d["frequency"] = sim_dict(sim::estimate_element_frequency(spec, trials, seed + 1));
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("trials") = 10000, py::arg("seed") = 20240817);
}
