#include "conifold/toric.hpp"

#include "conifold/errors.hpp"
#include "conifold/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace conifold {

void validate_fan(const FanInput& fan)
{
    if (fan.dimension < 1)
        throw Error(ErrorCode::InvalidInput, "fan dimension must be at least 1");
    std::set<Exponent> seen;
    for (const auto& ray : fan.rays) {
        if (ray.size() != static_cast<std::size_t>(fan.dimension))
            throw Error(ErrorCode::InvalidInput, "ray length differs from fan dimension");
        int g = 0;
        for (int x : ray)
            g = std::gcd(g, x);
        if (g != 1) {
            std::string text;
            for (int x : ray)
                text += (text.empty() ? "" : ",") + std::to_string(x);
            throw Error(ErrorCode::NonPrimitiveRay, "ray (" + text + ") has content " + std::to_string(g));
        }
        if (!seen.insert(ray).second)
            throw Error(ErrorCode::DuplicateRay, "ray listed twice");
    }
    if (integer_rank(fan.rays) != fan.dimension)
        throw Error(ErrorCode::DegenerateSpan, "rays do not span R^" + std::to_string(fan.dimension));
}

LaurentPolynomial potential_from_fan(const FanInput& fan)
{
    validate_fan(fan);
    LaurentPolynomial::TermMap terms;
    for (const auto& ray : fan.rays)
        terms.emplace(ray, Rational(1));
    return LaurentPolynomial(fan.dimension, std::move(terms));
}

ToricReport toric_report(const FanInput& fan, const SolverOptions& opts)
{
    const LaurentPolynomial potential = potential_from_fan(fan);

    ToricReport out;
    out.conifold = find_conifold_point(potential, opts);
    out.critical_value = out.conifold.critical_value;
    out.dimension = fan.dimension;
    out.ray_count = static_cast<int>(fan.rays.size());
    out.b2 = out.ray_count - fan.dimension;
    out.upper_bound = out.dimension + out.b2;
    out.lower_bound_conjecture = fan.dimension + 1.0;
    out.upper_ok = out.critical_value <= out.upper_bound + 1e-9;
    out.lower_ok = out.critical_value >= out.lower_bound_conjecture - 1e-9;

    Exponent sum(static_cast<std::size_t>(fan.dimension), 0);
    for (const auto& ray : fan.rays)
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += ray[i];
    out.rays_sum_to_zero = std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
    return out;
}

FanInput projective_space_fan(int dimension)
{
    if (dimension < 1)
        throw Error(ErrorCode::InvalidInput, "projective space dimension must be at least 1");
    const std::size_t d = static_cast<std::size_t>(dimension);
    FanInput fan{dimension, {}};
    for (std::size_t i = 0; i < d; ++i) {
        Exponent e(d, 0);
        e[i] = 1;
        fan.rays.push_back(std::move(e));
    }
    fan.rays.push_back(Exponent(d, -1));
    return fan;
}

std::vector<std::string> builtin_fan_names()
{
    return {"P1", "P2", "P3", "P4", "P1xP1", "P1xP2", "dP7", "dP6", "dP5", "hexagon"};
}

FanInput builtin_fan(std::string_view name)
{
    if (name == "P1")
        return projective_space_fan(1);
    if (name == "P2")
        return projective_space_fan(2);
    if (name == "P3")
        return projective_space_fan(3);
    if (name == "P4")
        return projective_space_fan(4);
    if (name == "P1xP1")
        return {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    if (name == "P1xP2")
        return {3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}}};
    if (name == "dP7")
        return {2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}};
    if (name == "dP6")
        return {2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}, {0, -1}}};
    if (name == "dP5" || name == "hexagon")
        return {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}}};
    throw Error(ErrorCode::UnknownName, "no builtin fan named '" + std::string(name) + "'");
}

}  // namespace conifold
