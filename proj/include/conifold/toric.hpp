#ifndef CONIFOLD_TORIC_HPP
#define CONIFOLD_TORIC_HPP

#include "conifold/laurent.hpp"
#include "conifold/solver.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace conifold {

/// Primitive ray generators of a fan in Z^d.
struct FanInput {
    int dimension = 0;
    std::vector<Exponent> rays;

    bool operator==(const FanInput&) const = default;
};

/// Checks primitivity, distinctness and full linear span. Does not check
/// that the rays form a complete, smooth or Fano fan.
void validate_fan(const FanInput& fan);

/// W_X = sum_v x^v, every coefficient exactly 1.
LaurentPolynomial potential_from_fan(const FanInput& fan);

struct ToricReport {
    ConifoldReport conifold;
    double critical_value = 0.0;
    int dimension = 0;
    int ray_count = 0;
    /// ray_count - d; the second Betti number for smooth projective fans.
    int b2 = 0;
    /// dim + b2 = ray_count, since T = W(P) <= W(unit point).
    int upper_bound = 0;
    /// Conjectured lower bound dim + 1.
    double lower_bound_conjecture = 0.0;
    bool upper_ok = false;
    bool lower_ok = false;
    /// The unit point is critical exactly when the rays sum to zero.
    bool rays_sum_to_zero = false;
};

/// Throws HypothesisViolated when the origin is not interior to the hull of
/// the rays (e.g. a non-complete fan).
ToricReport toric_report(const FanInput& fan, const SolverOptions& opts = {});

/// Standard rays of small smooth toric Fano varieties: P1..P4, P1xP1,
/// P1xP2, dP7 (Bl_1 P2), dP6 (Bl_2 P2), dP5 / hexagon (Bl_3 P2).
FanInput builtin_fan(std::string_view name);
std::vector<std::string> builtin_fan_names();

/// e_1, ..., e_d, -(e_1 + ... + e_d).
FanInput projective_space_fan(int dimension);

}  // namespace conifold

#endif
