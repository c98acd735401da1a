#ifndef CONIFOLD_EXACT_LP_HPP
#define CONIFOLD_EXACT_LP_HPP

#include "conifold/rational.hpp"

#include <vector>

namespace conifold {

/// maximize c^T x  subject to  A x = b,  x >= 0, over exact rationals.
struct LinearProgram {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;  // a basic optimal solution when status == Optimal
    Rational objective;
};

/// Dense two-phase tableau simplex with Bland's rule (no cycling). Sized for
/// problems with tens of rows and columns.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace conifold

#endif
