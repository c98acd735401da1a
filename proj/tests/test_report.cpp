#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/errors.hpp"
#include "conifold/report.hpp"
#include "corpus.hpp"

using namespace conifold;

TEST_CASE("polynomial JSON form")
{
    const auto w = parse_polynomial("3/2*x1 + 0.5*x1^-2");
    const Json doc = polynomial_to_json(w);
    CHECK(doc.dump() == R"({"d":1,"terms":[{"e":[-2],"c":"1/2"},{"e":[1],"c":"3/2"}]})");
    CHECK(polynomial_from_json(doc) == w);

    for (const auto& entry : corpus::polynomials()) {
        const auto p = corpus::parse(entry);
        CHECK(polynomial_from_json(Json::parse(polynomial_to_json(p).dump())) == p);
    }

    const auto merged = polynomial_from_json(
        Json::parse(R"({"d":1,"terms":[{"e":[1],"c":"1/2"},{"e":[1],"c":1},{"e":[-1],"c":"0.25"}]})"));
    CHECK(merged == parse_polynomial("3/2*x1 + 1/4*x1^-1"));
}

TEST_CASE("polynomial JSON errors")
{
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"terms":[]})")), Error);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"d":2,"terms":[{"e":[1],"c":"1"}]})")), Error);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"d":1,"terms":[{"e":[1],"c":1.5}]})")), Error);
    try {
        polynomial_from_json(Json::parse(R"({"d":1,"terms":[{"e":[1],"c":"-1"}]})"));
        FAIL("expected NegativeCoefficient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeCoefficient);
    }
}

TEST_CASE("fan JSON form")
{
    const FanInput fan = builtin_fan("dP6");
    CHECK(fan_from_json(fan_to_json(fan)) == fan);
    CHECK(fan_to_json(builtin_fan("P1")).dump() == R"({"d":1,"rays":[[1],[-1]]})");
    CHECK_THROWS_AS(fan_from_json(Json::parse(R"({"d":2,"rays":[[1,0],[1]]})")), Error);
    CHECK_THROWS_AS(load_fan_file("/nonexistent/fan.json"), Error);
}

TEST_CASE("validation document")
{
    Json doc = to_json(validate_support(parse_polynomial("x1 + x1^-1")));
    CHECK(doc["origin_interior"] == true);
    CHECK(doc["certificate"][0]["lambda"] == "1/2");
    CHECK(doc["nonvanishing"]["period"] == 2);
    CHECK_FALSE(doc.contains("failure_direction"));

    doc = to_json(validate_support(parse_polynomial("x1 + x2")));
    CHECK(doc["origin_interior"] == false);
    CHECK(doc["polytope_dim"] == 1);
    CHECK(doc["interior_margin"].is_null());
    CHECK(doc.contains("failure_direction"));
    CHECK_FALSE(doc.contains("certificate"));
}

TEST_CASE("report documents carry the solver and moment fields")
{
    const auto w = parse_polynomial("x1 + x1^-1");
    const Json c = to_json(find_conifold_point(w));
    CHECK(c["critical_value"] == 2.0);
    CHECK(c["point_log"].size() == 1);
    CHECK(c["trace"].is_array());

    const Json m = to_json(moment_sequence(w, 4));
    CHECK(m["values"] == Json::parse(R"(["1","0","2","0","6"])"));
    CHECK(m["period"] == 2);

    const Json t = to_json(toric_report(builtin_fan("P2")));
    CHECK(t["upper_bound"] == 3);
    CHECK(t["lower_ok"] == true);
}
