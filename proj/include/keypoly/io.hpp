#pragma once

#include <json.hpp>

#include "keypoly/corpus.hpp"
#include "keypoly/keytheory.hpp"

namespace keypoly {

using Json = nlohmann::json;

// Structured-text valuation configs, round-tripping exactly:
//   {"type":"monomial","p":2,"b":"0","delta":"(1/2,0)"}
//   {"type":"chain","depth0":{...},"steps":[{"Q":"x^2-2","gamma":"2"}]}
//   {"type":"pcs","p":2,"elems":["1","3","7","15"]}
// A pcs config may carry an optional affine generator
//   "extend":{"mult":"2","add":"1"}.
// For the staged pcs-from-chain input:
//   {"type":"stack","stages":[{monomial...},...]}.
Valuation valuation_from_json(const Json& j);
Json valuation_to_json(const Valuation& v);

std::vector<MonomialValuation> stages_from_json(const Json& j);
Json stages_to_json(const std::vector<MonomialValuation>& stages);

// Report serializers (the machine-readable CLI format).
Json to_json(const ExpansionReport& r);
Json to_json(const EpsilonReport& r);
Json to_json(const CrosscheckResult& r);
Json to_json(const TruncationScan& r);
Json to_json(const MultiplicativityScan& r);
Json to_json(const NewtonPolygon& np);
Json to_json(const IrreducibilityVerdict& v);
Json to_json(const KeyVerdict& v);
Json to_json(const MinimalPairResult& r);
Json to_json(const Theorem1Result& r);
Json to_json(const ClassifyReport& r);
Json to_json(const FindQResult& r);
Json to_json(const PcsTrace& t);
Json to_json(const PcsStageReport& r);

std::string classification_name(Classification c);
std::string pcs_verdict_name(PcsTraceVerdict v);

}  // namespace keypoly
