#ifndef HDVLAB_SCENARIO_REPORT_JSON_HPP
#define HDVLAB_SCENARIO_REPORT_JSON_HPP

#include "hdvlab/brauer/brauer_engine.hpp"

#include <json.hpp>

namespace hdv {

using Json = nlohmann::ordered_json;

/// Values print as strings ("3/2", "inf") so rationals survive exactly.
Json to_json(const Value& v);
Json to_json(const FieldElement& x);
Json to_json(const NormalityClass& c);
Json to_json(const ExtClassification& c);
Json to_json(const AbelianTowerReport& r);
Json to_json(const FactCheck& f);
Json to_json(const Lemma34Report& r);
Json to_json(const Lemma51Report& r);
Json to_json(const CyclicAlgebra& a);
Json to_json(const DivisionCertificate& c);
Json to_json(const NormSample& s);

}  // namespace hdv

#endif  // HDVLAB_SCENARIO_REPORT_JSON_HPP
