#ifndef CONIFOLD_POLYTOPE_HPP
#define CONIFOLD_POLYTOPE_HPP

#include "conifold/laurent.hpp"

#include <map>
#include <optional>
#include <vector>

namespace conifold {

/// Outcome of the Newton-polytope hypothesis check: the hull of the
/// exponents is d-dimensional and contains the origin in its interior.
struct SupportValidation {
    int dimension = 0;
    /// Affine dimension of the convex hull of the exponents.
    int polytope_dim = 0;
    /// Rank of the exponent vectors as a linear system.
    int linear_rank = 0;
    bool origin_interior = false;
    /// Optimal margin eps* of  max eps s.t. lambda_n >= eps, sum lambda_n = 1,
    /// sum lambda_n n = 0. Absent when the origin is outside the hull.
    std::optional<Rational> interior_margin;
    /// Strictly positive barycentric weights of the origin; filled iff
    /// origin_interior.
    std::map<Exponent, Rational> certificate;
    /// Primitive integer v != 0 with <v, n> <= 0 for every exponent n;
    /// filled whenever the origin is not interior.
    std::optional<std::vector<BigInt>> failure_direction;
};

SupportValidation validate_support(const LaurentPolynomial& w);

/// Re-checks the certificate in exact arithmetic: all weights positive,
/// summing to one, with barycentre at the origin.
bool certificate_holds(const SupportValidation& validation);

/// Re-checks <v, n> <= 0 for all exponents in exact integer arithmetic.
bool failure_direction_holds(const SupportValidation& validation, const LaurentPolynomial& w);

/// Integer weights m_n > 0 with sum m_n n = 0 and K = sum m_n, so the
/// monomial product prod x^{m_n n} = 1 appears in W^K with positive
/// coefficient and M_{jK}(W) > 0 for every j >= 1.
struct NonvanishingCertificate {
    std::map<Exponent, BigInt> weights;
    long period = 0;
};

/// Throws NoCertificate unless validation.origin_interior.
NonvanishingCertificate nonvanishing_certificate(const SupportValidation& validation);

/// Rank of integer row vectors by fraction-free elimination.
int integer_rank(const std::vector<Exponent>& rows);

/// A primitive integer vector v != 0 with <v, r> = 0 for all rows, or
/// nullopt when the rows span the whole space.
std::optional<std::vector<BigInt>> integer_kernel_vector(const std::vector<Exponent>& rows, int dimension);

}  // namespace conifold

#endif
