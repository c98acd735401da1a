#include "conifold/solver.hpp"

#include "conifold/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conifold {

namespace {

constexpr int kMaxRidgeDoublings = 10;
constexpr int kMaxBacktracks = 60;

// Newton direction -H^{-1} g; on numerical Cholesky failure retries with
// H + mu I, mu = 1e-12 trace(H), doubling mu.
std::vector<double> newton_direction(const Matrix& hessian, const std::vector<double>& gradient)
{
    std::vector<double> rhs(gradient.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = -gradient[i];

    if (auto l = cholesky(hessian))
        return cholesky_solve(*l, rhs);

    double mu = 1e-12 * std::max(hessian.trace(), std::numeric_limits<double>::min());
    for (int attempt = 0; attempt < kMaxRidgeDoublings; ++attempt, mu *= 2.0) {
        Matrix ridged = hessian;
        for (std::size_t i = 0; i < ridged.rows(); ++i)
            ridged(i, i) += mu;
        if (auto l = cholesky(ridged))
            return cholesky_solve(*l, rhs);
    }
    throw Error(ErrorCode::NotPositiveDefinite, "Hessian is not positive definite even after ridge regularization");
}

}  // namespace

void SolverOptions::validate() const
{
    if (!(gradient_tolerance > 0.0) || max_iterations <= 0 || !(max_step > 0.0) || !(armijo_c > 0.0)
        || !(backtrack_factor > 0.0) || !(backtrack_factor < 1.0))
        throw Error(ErrorCode::InvalidInput, "solver options must be positive with backtrack_factor < 1");
}

ConifoldReport minimize_log(const LaurentPolynomial& w, const SolverOptions& opts, const LogPoint& start)
{
    opts.validate();
    if (start.dimension() != static_cast<std::size_t>(w.dimension()))
        throw Error(ErrorCode::InvalidInput, "start point has the wrong dimension");

    std::vector<double> u(start.coords().begin(), start.coords().end());
    std::vector<IterationRecord> trace;

    for (int iter = 0;; ++iter) {
        const LogPoint here(u);
        const LogDerivatives der = derivatives_log(w, here);
        const double gnorm = sup_norm(der.gradient);

        if (gnorm <= opts.gradient_tolerance * std::max(1.0, der.value)) {
            trace.push_back({der.value, gnorm, 0.0, 0.0});
            ConifoldReport report;
            report.point_log = here;
            report.point_mult = here.multiplicative();
            report.critical_value = der.value;
            report.hessian_spectrum = certify_morse(w, here);
            report.iterations = iter;
            report.final_gradient_norm = gnorm;
            report.trace = std::move(trace);
            return report;
        }
        if (iter >= opts.max_iterations) {
            trace.push_back({der.value, gnorm, 0.0, 0.0});
            throw MaxIterationsError("gradient norm " + std::to_string(gnorm) + " after "
                                         + std::to_string(iter) + " iterations",
                                     std::move(trace));
        }

        std::vector<double> direction = newton_direction(der.hessian, der.gradient);
        const double length = sup_norm(direction);
        if (length > opts.max_step)
            for (auto& x : direction)
                x *= opts.max_step / length;
        const double slope = dot(der.gradient, direction);

        // Backtracking on the Armijo condition. The decrease is measured
        // directly so it stays meaningful below the rounding unit of W.
        double t = 1.0;
        std::vector<double> step(direction.size());
        bool accepted = false;
        double decrease = 0.0;
        for (int k = 0; k < kMaxBacktracks; ++k, t *= opts.backtrack_factor) {
            for (std::size_t i = 0; i < step.size(); ++i)
                step[i] = t * direction[i];
            try {
                decrease = difference_log(w, here, step);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::OverflowRisk)
                    throw;
                continue;
            }
            if (decrease <= opts.armijo_c * t * slope && decrease < 0.0) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            trace.push_back({der.value, gnorm, 0.0, 0.0});
            throw MaxIterationsError("line search stalled at gradient norm " + std::to_string(gnorm),
                                     std::move(trace));
        }

        trace.push_back({der.value, gnorm, sup_norm(step), decrease});
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] += step[i];
    }
}

ConifoldReport find_conifold_point(const LaurentPolynomial& w, const SolverOptions& opts)
{
    return find_conifold_point(w, opts, LogPoint::origin(w.dimension()));
}

ConifoldReport find_conifold_point(const LaurentPolynomial& w, const SolverOptions& opts, const LogPoint& start)
{
    const SupportValidation validation = validate_support(w);
    if (!validation.origin_interior)
        throw Error(ErrorCode::HypothesisViolated,
                    "the origin is not strictly inside the d-dimensional Newton polytope");
    return minimize_log(w, opts, start);
}

std::vector<double> certify_morse(const LaurentPolynomial& w, const LogPoint& p)
{
    const Matrix h = hessian_log(w, p);
    std::vector<double> spectrum = symmetric_eigenvalues(h);
    const double threshold = 1e-12 * h.trace();
    if (spectrum.empty() || !(spectrum.front() > threshold))
        throw Error(ErrorCode::NotPositiveDefinite,
                    "smallest Hessian eigenvalue " + std::to_string(spectrum.empty() ? 0.0 : spectrum.front())
                        + " is below 1e-12 * trace");
    return spectrum;
}

}  // namespace conifold
