#include "keypoly/io.hpp"

#include <stdexcept>

namespace keypoly {

namespace {

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

MonomialValuation monomial_from_json(const Json& j) {
    return MonomialValuation(BaseValuation(integer_from_json(j.at("p"))),
                             parse_rational(j.at("b").get<std::string>()),
                             Value::parse(j.at("delta").get<std::string>()));
}

Json prime_to_json(const Integer& p) {
    if (p.fits_slong_p()) return Json(p.get_si());
    return Json(p.get_str());
}

Json monomial_to_json(const MonomialValuation& w) {
    Json j;
    j["type"] = "monomial";
    j["p"] = prime_to_json(w.base().prime());
    j["b"] = to_string(w.center());
    j["delta"] = w.delta().str();
    return j;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument("unknown config key '" + it.key() + "'");
    }
}

}  // namespace

Valuation valuation_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("valuation config must be a JSON object");
    const std::string type = j.at("type").get<std::string>();
    if (type == "monomial") {
        reject_unknown_keys(j, {"type", "p", "b", "delta"});
        return Valuation(monomial_from_json(j));
    }
    if (type == "chain") {
        reject_unknown_keys(j, {"type", "depth0", "steps"});
        MonomialValuation depth0 = monomial_from_json(j.at("depth0"));
        std::vector<ChainStep> steps;
        for (const Json& s : j.at("steps")) {
            reject_unknown_keys(s, {"Q", "gamma"});
            steps.push_back({Poly::parse(s.at("Q").get<std::string>()),
                             Value::parse(s.at("gamma").get<std::string>())});
        }
        return Valuation(AugmentedChain(std::move(depth0), std::move(steps)));
    }
    if (type == "pcs") {
        reject_unknown_keys(j, {"type", "p", "elems", "extend"});
        std::vector<Rational> elems;
        for (const Json& e : j.at("elems")) elems.push_back(parse_rational(e.get<std::string>()));
        std::optional<PcsExtendRule> rule;
        if (j.contains("extend")) {
            reject_unknown_keys(j.at("extend"), {"mult", "add"});
            rule = PcsExtendRule{parse_rational(j.at("extend").at("mult").get<std::string>()),
                                 parse_rational(j.at("extend").at("add").get<std::string>())};
        }
        return Valuation(PcsPrefix(BaseValuation(integer_from_json(j.at("p"))), std::move(elems), std::move(rule)));
    }
    throw std::invalid_argument("unknown valuation type '" + type + "'");
}

Json valuation_to_json(const Valuation& v) {
    switch (v.kind()) {
        case Valuation::Kind::Monomial: return monomial_to_json(v.monomial());
        case Valuation::Kind::Chain: {
            Json j;
            j["type"] = "chain";
            j["depth0"] = monomial_to_json(v.chain().depth0());
            j["steps"] = Json::array();
            for (const ChainStep& s : v.chain().steps())
                j["steps"].push_back({{"Q", s.key.str()}, {"gamma", s.gamma.str()}});
            return j;
        }
        default: {
            Json j;
            j["type"] = "pcs";
            j["p"] = prime_to_json(v.pcs().base().prime());
            j["elems"] = Json::array();
            for (const Rational& a : v.pcs().elems()) j["elems"].push_back(to_string(a));
            if (v.pcs().rule())
                j["extend"] = {{"mult", to_string(v.pcs().rule()->mult)}, {"add", to_string(v.pcs().rule()->add)}};
            return j;
        }
    }
}

std::vector<MonomialValuation> stages_from_json(const Json& j) {
    if (!j.is_object() || j.at("type").get<std::string>() != "stack")
        throw std::invalid_argument("expected a {\"type\":\"stack\",\"stages\":[...]} config");
    reject_unknown_keys(j, {"type", "stages"});
    std::vector<MonomialValuation> stages;
    for (const Json& s : j.at("stages")) stages.push_back(monomial_from_json(s));
    return stages;
}

Json stages_to_json(const std::vector<MonomialValuation>& stages) {
    Json j;
    j["type"] = "stack";
    j["stages"] = Json::array();
    for (const MonomialValuation& w : stages) j["stages"].push_back(monomial_to_json(w));
    return j;
}

Json to_json(const ExpansionReport& r) {
    Json j;
    j["input"] = r.input.str();
    j["q"] = r.q.str();
    j["terms"] = Json::array();
    for (const ExpansionTerm& t : r.terms)
        j["terms"].push_back({{"i", t.index}, {"p_i", t.part.str()}, {"value", t.value.str()}});
    j["min_value"] = r.min_value.str();
    j["argmin"] = r.argmin;
    return j;
}

Json to_json(const EpsilonReport& r) {
    Json j;
    j["nu_f"] = r.nu_f.str();
    j["terms"] = Json::array();
    for (const EpsilonTerm& t : r.terms)
        j["terms"].push_back({{"r", t.r}, {"nu_deriv", t.deriv_value.str()}, {"quotient", t.quotient.str()}});
    j["epsilon"] = r.epsilon.str();
    j["argmax_r"] = r.argmax_r;
    return j;
}

Json to_json(const CrosscheckResult& r) {
    Json j;
    j["agree"] = r.agree;
    j["epsilon"] = r.eps.str();
    j["delta"] = r.delta.str();
    return j;
}

Json to_json(const TruncationScan& r) {
    Json j;
    j["equal"] = r.equal;
    j["corpus"] = r.corpus_note;
    if (!r.equal) {
        j["witness"] = r.witness.str();
        j["truncated"] = r.truncated.str();
        j["direct"] = r.direct.str();
    }
    return j;
}

Json to_json(const MultiplicativityScan& r) {
    Json j;
    j["valid"] = r.valid;
    if (!r.valid) {
        j["f"] = r.f.str();
        j["g"] = r.g.str();
        j["vq_fg"] = r.vq_fg.str();
        j["vq_f"] = r.vq_f.str();
        j["vq_g"] = r.vq_g.str();
    }
    return j;
}

Json to_json(const NewtonPolygon& np) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& [i, v] : np.vertices) j["vertices"].push_back({{"i", i}, {"value", v.str()}});
    j["slopes"] = Json::array();
    for (const auto& [s, m] : np.slopes) j["slopes"].push_back({{"slope", to_string(s)}, {"multiplicity", m}});
    j["order_at_zero"] = np.order_at_zero;
    return j;
}

Json to_json(const IrreducibilityVerdict& v) {
    Json j;
    switch (v.kind) {
        case IrreducibilityVerdict::Kind::Irreducible: j["verdict"] = "Irreducible"; break;
        case IrreducibilityVerdict::Kind::Reducible: j["verdict"] = "Reducible"; break;
        default: j["verdict"] = "UnknownAtBound"; break;
    }
    if (v.reducible()) j["factor"] = v.factor.str();
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json to_json(const KeyVerdict& v) {
    Json j;
    switch (v.kind) {
        case KeyVerdict::Kind::Key: j["verdict"] = "Key"; break;
        case KeyVerdict::Kind::NotKey: j["verdict"] = "NotKey"; break;
        default: j["verdict"] = "UnknownAtBound"; break;
    }
    if (v.not_key()) j["witness"] = v.witness.str();
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json to_json(const MinimalPairResult& r) {
    Json j;
    switch (r.kind) {
        case MinimalPairResult::Kind::NoViolation: j["verdict"] = "NoViolation"; break;
        case MinimalPairResult::Kind::NoViolationAtBound: j["verdict"] = "NoViolationAtBound"; break;
        default: j["verdict"] = "Violation"; break;
    }
    if (r.violated()) {
        j["witness_minpoly"] = r.witness_minpoly.str();
        j["distance"] = r.distance.str();
    }
    j["delta_q"] = r.delta_q.str();
    j["theorem_backed"] = r.theorem_backed;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const Theorem1Result& r) {
    Json j;
    switch (r.kind) {
        case Theorem1Result::Kind::Consistent: j["verdict"] = "Consistent"; break;
        case Theorem1Result::Kind::ConsistentWithCaveat: j["verdict"] = "ConsistentWithCaveat"; break;
        default: j["verdict"] = "Inconsistent"; break;
    }
    j["details"] = r.details;
    j["is_key"] = to_json(r.key);
    j["minimal_pair"] = to_json(r.pair);
    return j;
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::ValueTranscendental: return "ValueTranscendental";
        case Classification::ResidueTranscendental: return "ResidueTranscendental";
        default: return "NotFinitelyRepresented";
    }
}

Json to_json(const ClassifyReport& r) {
    Json j;
    j["classification"] = classification_name(r.kind);
    j["basis"] = r.basis;
    return j;
}

Json to_json(const FindQResult& r) {
    Json j;
    j["found"] = r.found;
    if (r.found) j["q"] = r.q.str();
    j["note"] = r.note;
    return j;
}

std::string pcs_verdict_name(PcsTraceVerdict v) {
    switch (v) {
        case PcsTraceVerdict::FixedAtIndex: return "FixedAtIndex";
        case PcsTraceVerdict::IncreasingThroughPrefix: return "IncreasingThroughPrefix";
        default: return "NotStabilized";
    }
}

Json to_json(const PcsTrace& t) {
    Json j;
    j["values"] = Json::array();
    for (const Value& v : t.values) j["values"].push_back(v.str());
    j["verdict"] = pcs_verdict_name(t.verdict);
    if (t.verdict == PcsTraceVerdict::FixedAtIndex) j["fixed_index"] = t.fixed_index;
    j["note"] = t.note;
    return j;
}

Json to_json(const PcsStageReport& r) {
    Json j;
    j["stages"] = Json::array();
    for (const auto& [center, eps] : r.stages)
        j["stages"].push_back({{"center", to_string(center)}, {"eps", eps.str()}});
    j["checks"] = Json::array();
    for (const PcsStageCheck& c : r.checks)
        j["checks"].push_back({{"i", c.i},
                               {"j", c.j},
                               {"actual", c.actual.str()},
                               {"expected", c.expected.str()},
                               {"ok", c.ok}});
    j["all_ok"] = r.all_ok;
    return j;
}

}  // namespace keypoly
