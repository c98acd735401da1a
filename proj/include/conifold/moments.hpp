#ifndef CONIFOLD_MOMENTS_HPP
#define CONIFOLD_MOMENTS_HPP

#include "conifold/laurent.hpp"
#include "conifold/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conifold {

/// Exact constant terms M_k = [x^0] W^k for k = 0..kmax.
struct MomentSequence {
    int kmax = 0;
    std::vector<Rational> values;
    /// Period K of guaranteed nonvanishing (M_{jK} > 0); absent when the
    /// origin is not interior to the Newton polytope.
    std::optional<long> period;
    /// Indices k with M_k != 0, ascending.
    std::vector<int> support;
};

struct MomentOptions {
    /// Upper bound on the predicted number of terms of W^kmax.
    double term_budget = 1e7;
};

/// (kmax * diameter + 1)^d, diameter being the widest coordinate extent of
/// the exponents. Saturates instead of overflowing.
double predicted_term_count(const LaurentPolynomial& w, int kmax);

/// Iterated exact sparse products P_{k+1} = P_k * W. Throws
/// TermBudgetExceeded when predicted_term_count exceeds the budget.
MomentSequence moment_sequence(const LaurentPolynomial& w, int kmax, const MomentOptions& opts = {});

/// Per-period ratios (M_{jK} / M_{(j-1)K})^{1/K} for j = 1..kmax/K.
std::vector<double> period_ratios(const MomentSequence& seq);

/// Estimate of limsup M_k^{1/k}: the per-period ratio at the two largest
/// support indices K apart, else the k-th root at the largest nonzero index.
/// Throws InsufficientData with fewer than 10 nonzero moments.
double growth_estimate(const MomentSequence& seq);

struct DkReport {
    double critical_value = 0.0;
    double estimate = 0.0;
    double relative_gap = 0.0;
    /// Radius of convergence of sum_k M_k t^k implied by the critical value.
    double radius = 0.0;
    int kmax = 0;
};

DkReport dk_report(const LaurentPolynomial& w, int kmax, const SolverOptions& solver = {},
                   const MomentOptions& opts = {});

/// Same as above, reusing an already computed moment sequence.
DkReport dk_report(const LaurentPolynomial& w, const MomentSequence& seq, const SolverOptions& solver = {});

/// "k,M_k" header followed by one line per k; integers in decimal, other
/// rationals as p/q.
std::string moments_csv(const MomentSequence& seq);

}  // namespace conifold

#endif
