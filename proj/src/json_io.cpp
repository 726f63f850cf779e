#include "realdiv/json_io.hpp"

namespace realdiv {

using nlohmann::json;

json to_json(const RealHyperellipticCurve& curve) {
    json j;
    j["family"] = curve.family() == CurveFamily::family_a ? "family_a" : "m_curve";
    j["params"] = curve.params();
    const auto t = curve.topo_type();
    j["genus"] = curve.genus();
    j["topological_type"] = {t.g, t.r, t.a};
    return j;
}

RealHyperellipticCurve curve_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    const auto params = j.at("params").get<std::vector<double>>();
    if (family == "family_a") {
        if (params.size() != 3) throw CurveError("curve_from_json: family_a needs 3 params");
        return make_family_a(params[0], params[1], params[2]);
    }
    if (family == "m_curve") return make_m_curve(params);
    throw CurveError("curve_from_json: unknown family '" + family + "'");
}

json to_json(const QuadratureSpec& spec) {
    return json{{"abs_tol", spec.abs_tol}, {"rel_tol", spec.rel_tol},
                {"max_levels", spec.max_levels}};
}

namespace {
template <class M>
json matrix_to_json(const M& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}
}  // namespace

json to_json(const ComessattiPeriods& p) {
    json j;
    j["g"] = p.g;
    j["M"] = matrix_to_json(p.M);
    j["T"] = matrix_to_json(p.T);
    j["residuals"] = {{"symmetry_defect", p.residuals.symmetry_defect},
                      {"integrality_defect", p.residuals.integrality_defect},
                      {"min_eigenvalue_T", p.residuals.min_eigenvalue_T}};
    return j;
}

json to_json(const RealJacobianReport& r) {
    json j;
    j["g"] = r.g;
    j["gamma"] = r.gamma;
    j["component_count"] = r.component_count;
    j["vol_identity"] = r.vol_identity;
    j["vol_total"] = r.vol_total;
    j["lattice_side_lengths"] = r.lattice_side_lengths;
    return j;
}

json to_json(const BoundReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"name", e.name},
                           {"kind", e.kind == BoundKind::lower ? "lower" : "upper"},
                           {"value", e.value},
                           {"validity", e.validity},
                           {"provenance", e.provenance}});
    }
    return json{{"curve_id", r.curve_id}, {"entries", std::move(entries)}};
}

json to_json(const TorusPolyline& line) {
    json j;
    j["g"] = line.g;
    j["component_label"] = line.component_label;
    j["closed"] = line.closed;
    j["closure_defect"] = line.closure_defect;
    j["points"] = matrix_to_json(line.points);
    return j;
}

json to_json(const CoverBracket& b) {
    return json{{"m_lower", b.m_lower}, {"m_upper", b.m_upper}};
}

}  // namespace realdiv
