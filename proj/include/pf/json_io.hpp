#ifndef PF_JSON_IO_HPP
#define PF_JSON_IO_HPP

#include <json.hpp>

#include "pf/critgeom.hpp"
#include "pf/critical.hpp"
#include "pf/derive.hpp"
#include "pf/division.hpp"
#include "pf/normalization.hpp"
#include "pf/parse.hpp"

namespace pf {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "pf/1";

inline Json complex_json(const CD& z) { return Json::array({z.real(), z.imag()}); }
template <class K>
Json scalar_json(const K& v) {
    return complex_json(to_complex(v));
}

template <class K>
Json matrix_json(const Mat<K>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
Json poly_json(const BiPoly<K>& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"a", e.a}, {"b", e.b}, {"c", scalar_json(c)}});
    return terms;
}

template <class K>
Json form1_json(const Form1<K>& w) {
    return Json{{"P", poly_json(w.P)}, {"Q", poly_json(w.Q)}};
}

template <class K>
Json report_json(const NormalizationReport<K>& r) {
    return Json{{"schema", kSchemaTag},
                {"kind", "normalization_report"},
                {"regular", r.regular_at_infinity},
                {"inverse_norm", r.inverse_norm},
                {"quasimonic", r.quasimonic},
                {"scale", scalar_json(r.scale_applied)},
                {"condition_number", r.condition_number}};
}

template <class K>
Json cert_json(const DivisionCert<K>& c) {
    using Traits = ScalarTraits<K>;
    return Json{{"C", Traits::to_double(c.C)},
                {"K", Traits::to_double(c.Kfactor)},
                {"claimed", Traits::to_double(c.claimed)},
                {"achieved", Traits::to_double(c.achieved)}};
}

template <class K>
Json system_json(const PFSystem<K>& sys, bool include_etas = false) {
    using Traits = ScalarTraits<K>;
    Json basis = Json::array();
    for (const auto& e : sys.basis.entries()) basis.push_back(Json{{"a", e.a}, {"b", e.b}});
    Json j{{"schema", kSchemaTag},
           {"kind", "pf_system"},
           {"n", sys.n},
           {"nu", sys.nu},
           {"provenance", provenance_name(sys.provenance)},
           {"basis", std::move(basis)},
           {"A", matrix_json(sys.A)},
           {"B", matrix_json(sys.B)},
           {"cert",
            Json{{"achieved", Traits::to_double(sys.cert.achieved)},
                 {"norm_A", Traits::to_double(sys.cert.norm_A)},
                 {"norm_B", Traits::to_double(sys.cert.norm_B)},
                 {"bound_thm", sys.cert.bound_thm},
                 {"bound_proof", sys.cert.bound_proof}}}};
    if (!sys.basis_scale.empty()) {
        Json scales = Json::array();
        for (const auto& s : sys.basis_scale) scales.push_back(scalar_json(s));
        j["basis_scale"] = std::move(scales);
    }
    if (sys.provenance == Provenance::Fuchsianized) j["homotopy_s"] = sys.fuchs_s;
    if (include_etas) {
        Json etas = Json::array();
        for (const auto& w : sys.etas) etas.push_back(form1_json(w));
        j["etas"] = std::move(etas);
    }
    return j;
}

template <class K>
Json block_json(const BlockSystem<K>& bs) {
    return Json{{"schema", kSchemaTag}, {"kind", "block_system"},   {"m", bs.m},
                {"size", bs.size},      {"A", matrix_json(bs.blockA)}, {"B", matrix_json(bs.blockB)},
                {"norm_bound", bs.norm_bound}};
}

inline Json locus_json(const CriticalLocus& locus) {
    Json pts = Json::array();
    for (const auto& cp : locus.points)
        pts.push_back(Json{{"x", complex_json(cp.x)}, {"y", complex_json(cp.y)}, {"m", cp.multiplicity}});
    Json vals = Json::array();
    for (const auto& t : locus.values) vals.push_back(complex_json(t));
    return Json{{"schema", kSchemaTag},
                {"kind", "critical_locus"},
                {"points", std::move(pts)},
                {"values", std::move(vals)},
                {"total_multiplicity", locus.total_multiplicity},
                {"regular", locus.regular_at_infinity},
                {"complete", locus.complete}};
}

inline Json unicrit_json(const UniCritReport& r) {
    Json cp = Json::array(), cv = Json::array(), rt = Json::array();
    for (const auto& z : r.crit_points) cp.push_back(complex_json(z));
    for (const auto& z : r.crit_values) cv.push_back(complex_json(z));
    for (const auto& z : r.roots) rt.push_back(complex_json(z));
    return Json{{"schema", kSchemaTag},
                {"kind", "uni_crit_report"},
                {"crit_points", std::move(cp)},
                {"crit_values", std::move(cv)},
                {"roots", std::move(rt)},
                {"root_diameter", r.root_diameter},
                {"sigma_in_unit_disk", r.sigma_in_unit_disk}};
}

inline Json kappa_json(const KappaEstimate& k) {
    return Json{{"schema", kSchemaTag},
                {"kind", "kappa_estimate"},
                {"kappa_upper", k.kappa_upper},
                {"alpha", complex_json(k.alpha)},
                {"beta", complex_json(k.beta)},
                {"iterations", k.iterations}};
}

inline Json error_json(const std::string& kind, const std::string& message) {
    return Json{{"schema", kSchemaTag}, {"kind", "error"}, {"error_class", kind}, {"message", message}};
}

} // namespace pf

#endif
