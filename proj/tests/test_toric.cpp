#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/errors.hpp"
#include "conifold/report.hpp"
#include "conifold/toric.hpp"

#include <cmath>

using namespace conifold;

namespace {

ErrorCode fan_error(const FanInput& fan)
{
    try {
        potential_from_fan(fan);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a fan error");
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("potential_from_fan examples")
{
    CHECK(potential_from_fan({1, {{1}, {-1}}}) == parse_polynomial("x1 + x1^-1"));
    CHECK(potential_from_fan({2, {{1, 0}, {0, 1}, {-1, -1}}}) == parse_polynomial("x1 + x2 + x1^-1*x2^-1"));
    CHECK(fan_error({1, {{2}}}) == ErrorCode::NonPrimitiveRay);
    CHECK(fan_error({2, {{0, 0}, {1, 0}}}) == ErrorCode::NonPrimitiveRay);
    CHECK(fan_error({2, {{1, 0}, {1, 0}, {0, 1}}}) == ErrorCode::DuplicateRay);
    CHECK(fan_error({2, {{1, 0}, {-1, 0}}}) == ErrorCode::DegenerateSpan);
    CHECK(fan_error({2, {{1, 0, 0}}}) == ErrorCode::InvalidInput);
}

TEST_CASE("builtin fans")
{
    CHECK(builtin_fan("P2").rays == std::vector<Exponent>{{1, 0}, {0, 1}, {-1, -1}});
    CHECK(builtin_fan("hexagon").rays == std::vector<Exponent>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}});
    CHECK(builtin_fan("dP5") == builtin_fan("hexagon"));
    CHECK(builtin_fan("dP7").rays == std::vector<Exponent>{{1, 0}, {0, 1}, {-1, -1}, {1, 1}});
    CHECK(builtin_fan("dP6").rays == std::vector<Exponent>{{1, 0}, {0, 1}, {-1, -1}, {1, 1}, {0, -1}});
    try {
        builtin_fan("P7");
        FAIL("expected UnknownName");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownName);
    }
    for (const auto& name : builtin_fan_names())
        CHECK_NOTHROW(validate_fan(builtin_fan(name)));
}

TEST_CASE("shipped fan data files match the builtins")
{
    for (const auto& name : builtin_fan_names()) {
        if (name == "hexagon")
            continue;
        CAPTURE(name);
        CHECK(load_fan_file(std::string(CONIFOLD_DATA_DIR) + "/fans/" + name + ".json") == builtin_fan(name));
    }
}

TEST_CASE("toric_report examples")
{
    auto r = toric_report({3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}});
    CHECK(std::fabs(r.critical_value - 4.0) <= 1e-9);
    CHECK(r.ray_count == 4);
    CHECK(r.upper_bound == 4);
    CHECK(r.lower_bound_conjecture == 4.0);
    CHECK(r.upper_ok);
    CHECK(r.lower_ok);

    r = toric_report(builtin_fan("hexagon"));
    CHECK(std::fabs(r.critical_value - 6.0) <= 1e-9);
    CHECK(r.ray_count == 6);
    CHECK(r.b2 == 4);
    CHECK(r.critical_value > r.lower_bound_conjecture + 1.0);

    r = toric_report(builtin_fan("P1xP1"));
    CHECK(std::fabs(r.critical_value - 4.0) <= 1e-9);
    CHECK(r.ray_count == 4);

    // Non-complete fan: rays in a half-plane.
    try {
        toric_report({2, {{1, 0}, {0, 1}, {1, 1}}});
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisViolated);
    }
}

TEST_CASE("property: bounds and the unit-point criterion on builtins")
{
    for (const auto& name : builtin_fan_names()) {
        CAPTURE(name);
        const auto r = toric_report(builtin_fan(name));
        CHECK(r.upper_ok);
        CHECK(r.critical_value <= r.ray_count + 1e-9);
        CHECK(r.lower_ok);
        const bool tight_upper = std::fabs(r.critical_value - r.ray_count) <= 1e-9;
        CHECK(tight_upper == r.rays_sum_to_zero);
        const bool tight_lower = std::fabs(r.critical_value - (r.dimension + 1)) <= 1e-9;
        CHECK(tight_lower == (name.size() == 2 && name[0] == 'P'));
    }
}

TEST_CASE("projective space series")
{
    for (int d = 1; d <= 6; ++d) {
        CAPTURE(d);
        const auto r = toric_report(projective_space_fan(d));
        CHECK(std::fabs(r.critical_value - (d + 1)) <= 1e-9);
    }
}
