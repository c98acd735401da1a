#ifndef CONIFOLD_SOLVER_HPP
#define CONIFOLD_SOLVER_HPP

#include "conifold/errors.hpp"
#include "conifold/laurent.hpp"

#include <vector>

namespace conifold {

struct SolverOptions {
    /// Sup-norm gradient tolerance, relative to max(1, W(iterate)).
    double gradient_tolerance = 1e-10;
    int max_iterations = 200;
    /// Sup-norm cap on a single Newton step.
    double max_step = 10.0;
    double armijo_c = 1e-4;
    double backtrack_factor = 0.5;

    /// Throws InvalidInput unless every field is positive and
    /// backtrack_factor < 1.
    void validate() const;
};

struct IterationRecord {
    double value = 0.0;
    double gradient_norm = 0.0;
    /// Sup-norm of the accepted step (0 on the final record).
    double step = 0.0;
    /// W(next iterate) - W(this iterate), accumulated termwise with expm1 so
    /// it stays exact in sign when the change is below the rounding unit of
    /// value (0 on the final record).
    double decrease = 0.0;
};

struct ConifoldReport {
    LogPoint point_log;
    std::vector<double> point_mult;
    double critical_value = 0.0;
    std::vector<double> hessian_spectrum;
    int iterations = 0;
    double final_gradient_norm = 0.0;
    std::vector<IterationRecord> trace;
};

/// Raised when the iteration budget runs out; keeps the trace for diagnosis.
class MaxIterationsError : public Error {
public:
    MaxIterationsError(const std::string& message, std::vector<IterationRecord> trace)
        : Error(ErrorCode::MaxIterations, message), trace_(std::move(trace))
    {
    }

    const std::vector<IterationRecord>& trace() const noexcept { return trace_; }

private:
    std::vector<IterationRecord> trace_;
};

/// The unique critical point of W on the positive locus, started from the
/// unit point u = 0. Throws HypothesisViolated unless the origin is interior
/// to the Newton polytope.
ConifoldReport find_conifold_point(const LaurentPolynomial& w, const SolverOptions& opts = {});
ConifoldReport find_conifold_point(const LaurentPolynomial& w, const SolverOptions& opts,
                                   const LogPoint& start);

/// Damped Newton minimization without the hypothesis gate. Used to probe
/// behaviour on inputs that fail the check; does not certify the result.
ConifoldReport minimize_log(const LaurentPolynomial& w, const SolverOptions& opts,
                            const LogPoint& start);

/// Eigenvalues of the log Hessian at P, ascending. Throws
/// NotPositiveDefinite if one falls below 1e-12 * trace.
std::vector<double> certify_morse(const LaurentPolynomial& w, const LogPoint& p);

}  // namespace conifold

#endif
