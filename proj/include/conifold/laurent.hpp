#ifndef CONIFOLD_LAURENT_HPP
#define CONIFOLD_LAURENT_HPP

#include "conifold/linalg.hpp"
#include "conifold/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conifold {

using Exponent = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

/// Sparse Laurent polynomial sum_n a_n x^n with exact positive rational
/// coefficients. Immutable after construction; the binary64 copies of the
/// coefficients used for evaluation are computed once up front.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    /// Takes an already merged term map. Throws NegativeCoefficient for a
    /// coefficient <= 0 and InvalidInput for dimension mismatches.
    LaurentPolynomial(int dimension, TermMap terms);

    /// Sums coefficients of repeated exponents before validating.
    static LaurentPolynomial from_terms(int dimension,
                                        const std::vector<std::pair<Exponent, Rational>>& terms);

    int dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// Exponents and binary64 coefficients, aligned with the iteration
    /// order of terms().
    const std::vector<Exponent>& exponents() const noexcept { return exponents_; }
    std::span<const double> coefficients() const noexcept { return coefficients_; }

    bool operator==(const LaurentPolynomial& other) const
    {
        return dimension_ == other.dimension_ && terms_ == other.terms_;
    }

private:
    int dimension_;
    TermMap terms_;
    std::vector<Exponent> exponents_;
    std::vector<double> coefficients_;
};

/// Logarithmic coordinates u with x_i = exp(u_i). Entries must be finite.
class LogPoint {
public:
    LogPoint() = default;
    explicit LogPoint(std::vector<double> u);

    static LogPoint origin(int dimension) { return LogPoint(std::vector<double>(dimension, 0.0)); }

    std::size_t dimension() const noexcept { return u_.size(); }
    std::span<const double> coords() const noexcept { return u_; }
    double operator[](std::size_t i) const { return u_[i]; }

    std::vector<double> multiplicative() const;

private:
    std::vector<double> u_;
};

/// Largest admissible <u, n> for any term; exp(709) is the binary64 ceiling.
inline constexpr double kMaxLogExponent = 700.0;

double evaluate_log(const LaurentPolynomial& w, const LogPoint& u);
std::vector<double> gradient_log(const LaurentPolynomial& w, const LogPoint& u);
Matrix hessian_log(const LaurentPolynomial& w, const LogPoint& u);

struct LogDerivatives {
    double value = 0.0;
    std::vector<double> gradient;
    Matrix hessian;
};

/// Value, gradient and Hessian in one pass over the terms.
LogDerivatives derivatives_log(const LaurentPolynomial& w, const LogPoint& u);

/// W(u + step) - W(u) evaluated termwise with expm1, so the difference keeps
/// full relative accuracy even when it is far below the rounding unit of W.
double difference_log(const LaurentPolynomial& w, const LogPoint& u, std::span<const double> step);

/// Replaces every exponent n by M n. M must be integer with det = +-1.
LaurentPolynomial substitute_monomial(const LaurentPolynomial& w, const IntMatrix& m);

/// c * W for rational c > 0.
LaurentPolynomial scale(const LaurentPolynomial& w, const Rational& c);

/// Substitutes x_i -> b_i x_i, i.e. a_n -> a_n * prod_i b_i^{n_i}. In log
/// coordinates this is the translation u -> u + log b.
LaurentPolynomial rescale_variables(const LaurentPolynomial& w, std::span<const Rational> base);

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

/// Parses the text grammar
///   polynomial := term (('+' | '-') term)*
///   term       := coeff ('*' factor)* | factor ('*' factor)*
///   coeff      := integer | integer '/' integer | decimal
///   factor     := 'x' index ('^' signedInteger)?
/// Repeated exponents are merged. The dimension is the highest variable
/// index unless `dimension` is given.
LaurentPolynomial parse_polynomial(std::string_view text, std::optional<int> dimension = std::nullopt);

/// Canonical text form accepted by parse_polynomial (with the same
/// dimension). Terms appear in exponent order.
std::string serialize(const LaurentPolynomial& w);

}  // namespace conifold

#endif
