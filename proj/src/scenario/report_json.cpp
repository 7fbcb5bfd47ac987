#include "hdvlab/scenario/report_json.hpp"

namespace hdv {

namespace {

template <class T>
Json opt(const std::optional<T>& x) {
    return x ? to_json(*x) : Json(nullptr);
}

}  // namespace

Json to_json(const Value& v) { return v.str(); }

Json to_json(const FieldElement& x) { return x.field() ? Json(x.str()) : Json(nullptr); }

Json to_json(const NormalityClass& c) {
    Json j;
    j["lambda"] = to_json(c.lambda);
    j["verdict"] = verdict_name(c.verdict);
    j["v_pi"] = to_json(c.v_pi);
    j["threshold"] = to_string(c.threshold);
    j["root"] = opt(c.root);
    j["pi1"] = opt(c.pi1);
    j["a"] = opt(c.a);
    j["b"] = opt(c.b);
    j["improvement"] = opt(c.improvement);
    j["root_field_agrees"] = c.root_field_agrees ? Json(*c.root_field_agrees) : Json(nullptr);
    return j;
}

Json to_json(const ExtClassification& c) {
    Json j;
    j["kind"] = ext_class_name(c.kind);
    j["degree"] = c.degree;
    j["e"] = c.e;
    j["f"] = c.f;
    j["defectless"] = c.defectless;
    j["residue"] = c.residue;
    j["witness"] = to_json(c.witness);
    j["witness_value"] = to_json(c.witness_value);
    j["residue_radicand"] = c.residue_radicand ? Json(c.residue_radicand->str()) : Json(nullptr);
    return j;
}

Json to_json(const AbelianTowerReport& r) {
    Json j;
    j["kind"] = r.kind;
    j["base"] = r.base ? Json(r.base->descriptor()) : Json(nullptr);
    j["generators"] = Json::array();
    for (const auto& g : r.generators) j["generators"].push_back(to_json(g));
    j["rank"] = r.rank;
    j["degree"] = r.degree;
    j["steps"] = Json::array();
    for (const auto& s : r.steps) {
        Json st = to_json(s.cls);
        st["field"] = s.field->descriptor();
        j["steps"].push_back(st);
    }
    j["total_e"] = r.total_e;
    j["totally_ramified"] = r.totally_ramified;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const FactCheck& f) { return Json{{"name", f.name}, {"holds", f.holds}, {"detail", f.detail}}; }

Json to_json(const Lemma34Report& r) {
    Json j;
    j["xi"] = to_json(r.xi);
    j["lambda"] = to_json(r.lambda);
    j["defect"] = to_json(r.defect);
    j["defect_root"] = to_json(r.defect_root);
    j["lambda_power"] = outcome_name(r.lambda_power);
    return j;
}

Json to_json(const Lemma51Report& r) {
    Json j;
    j["pi"] = to_json(r.pi);
    j["alphas"] = Json::array();
    for (const auto& a : r.alphas) j["alphas"].push_back(to_json(a));
    j["lambdas"] = Json::array();
    for (const auto& l : r.lambdas) j["lambdas"].push_back(to_json(l));
    j["tower"] = to_json(r.tower);
    j["gamma"] = to_string(r.gamma);
    j["eta1_value"] = to_json(r.eta1_value);
    j["eta1_expected"] = to_json(r.eta1_expected);
    j["descent"] = Json::array();
    for (const auto& d : r.descent)
        j["descent"].push_back(Json{{"j", d.j},
                                    {"alpha1", to_json(d.alpha1)},
                                    {"xi1", to_json(d.xi1)},
                                    {"xi1_value", to_json(d.xi1_value)},
                                    {"same_coset", d.same_coset}});
    j["level1_verdict"] = r.level1_verdict ? Json(verdict_name(*r.level1_verdict)) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

Json to_json(const CyclicAlgebra& a) {
    return Json{{"field", a.field->descriptor()},
                {"slot", to_json(a.slot)},
                {"action", a.action},
                {"sigma_theta", to_json(a.sigma_theta)}};
}

Json to_json(const DivisionCertificate& c) {
    Json j;
    j["field"] = c.field;
    j["tower"] = c.tower ? to_json(*c.tower) : Json(nullptr);
    j["residues"] = Json::array();
    for (const auto& r : c.residues) j["residues"].push_back(r.str());
    j["p_independent"] = c.p_independent;
    j["checks"] = Json::array();
    for (const auto& ch : c.checks) j["checks"].push_back(to_json(ch));
    j["conclusion"] = Json{{"division", c.division},
                           {"degree", c.degree},
                           {"exponent", c.exponent},
                           {"residue_degree", c.residue_degree},
                           {"ramification", c.ramification},
                           {"residue_algebra", c.residue_algebra}};
    j["provenance"] = c.provenance;
    j["trusted_external"] = c.trusted_external;
    j["failure"] = c.failure.empty() ? Json(nullptr) : Json(c.failure);
    return j;
}

Json to_json(const NormSample& s) {
    Json j{{"trials", s.trials}, {"hits", s.hits}, {"min_gap", to_json(s.min_gap)}, {"label", s.label}};
    j["witnesses"] = Json::array();
    for (const auto& w : s.witnesses) j["witnesses"].push_back(to_json(w));
    return j;
}

}  // namespace hdv
