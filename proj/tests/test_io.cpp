#include <doctest.h>

#include "helpers.hpp"

using namespace kt;

TEST_CASE("valuation configs round-trip") {
    const Json monomial_cfg = Json::parse(R"json({"type":"monomial","p":2,"b":"0","delta":"(1/2,0)"})json");
    const Valuation w = valuation_from_json(monomial_cfg);
    CHECK(w.kind() == Valuation::Kind::Monomial);
    CHECK(w(P("x^2-2")) == W("1"));
    CHECK(valuation_from_json(valuation_to_json(w))(P("x^3+2")) == w(P("x^3+2")));

    const Json chain_cfg = Json::parse(
        R"json({"type":"chain","depth0":{"type":"monomial","p":2,"b":"0","delta":"1/2"},)json"
        R"json("steps":[{"Q":"x^2-2","gamma":"2"}]})json");
    const Valuation chain = valuation_from_json(chain_cfg);
    CHECK(chain(P("x^2-2")) == W("2"));
    const Json dumped = valuation_to_json(chain);
    CHECK(dumped.at("steps")[0].at("Q").get<std::string>() == "x^2 - 2");
    CHECK(valuation_from_json(dumped)(P("x^2-2")) == W("2"));

    const Json pcs_cfg = Json::parse(
        R"json({"type":"pcs","p":2,"elems":["1","3","7","15"],"extend":{"mult":"2","add":"1"}})json");
    const Valuation s = valuation_from_json(pcs_cfg);
    REQUIRE(s.kind() == Valuation::Kind::Pcs);
    CHECK(pcs_check(s.pcs()));
    CHECK(s.pcs().rule().has_value());
    const Json pcs_dumped = valuation_to_json(s);
    CHECK(pcs_dumped == pcs_cfg);  // canonical fields reproduce exactly
}

TEST_CASE("configs reject unknown keys and bad shapes") {
    CHECK_THROWS_AS(valuation_from_json(Json::parse(R"json({"type":"monomial","p":2,"b":"0","delta":"1","x":1})json")),
                    std::invalid_argument);
    CHECK_THROWS_AS(valuation_from_json(Json::parse(R"json({"type":"gauss"})json")), std::invalid_argument);
    CHECK_THROWS_AS(valuation_from_json(Json::parse(R"json([1,2,3])json")), std::invalid_argument);
    CHECK_THROWS_AS(valuation_from_json(Json::parse(R"json({"type":"monomial","p":6,"b":"0","delta":"1"})json")),
                    std::invalid_argument);
}

TEST_CASE("stage stacks parse and serialize") {
    const Json stack = Json::parse(
        R"json({"type":"stack","stages":[)json"
        R"json({"type":"monomial","p":2,"b":"1","delta":"1"},)json"
        R"json({"type":"monomial","p":2,"b":"3","delta":"2"}]})json");
    const auto stages = stages_from_json(stack);
    REQUIRE(stages.size() == 2);
    CHECK(pcs_from_chain(stages).all_ok);
    CHECK(stages_from_json(stages_to_json(stages)).size() == 2);
    CHECK_THROWS_AS(stages_from_json(Json::parse(R"json({"type":"pcs","p":2,"elems":["1"]})json")),
                    std::invalid_argument);
}

TEST_CASE("report serializers carry the full data") {
    const Valuation V = demo_chain();
    const Json t = to_json(truncate(V, P("x^2-2"), P("x^4+2x")));
    CHECK(t.contains("terms"));
    CHECK(t.contains("min_value"));
    CHECK(t.contains("argmin"));

    const Json e = to_json(epsilon(V, P("x^2-2")));
    CHECK(e.at("epsilon").get<std::string>() == "1");
    CHECK(e.at("argmax_r").get<int>() == 2);

    const Json k = to_json(is_key(V, P("x^2-2"), SearchBound{2, Integer(16)}));
    CHECK(k.at("verdict").get<std::string>() == "Key");

    const Json c = to_json(classify(V));
    CHECK(c.at("classification").get<std::string>() == "ResidueTranscendental");

    const Json np = to_json(newton_polygon(P("x^2+x+4"), 2));
    CHECK(np.at("slopes").size() == 2);
}
