#include "conifold/laurent.hpp"

#include "conifold/errors.hpp"

#include <cmath>
#include <limits>

namespace conifold {

namespace {

void check_point(const LaurentPolynomial& w, const LogPoint& u)
{
    if (u.dimension() != static_cast<std::size_t>(w.dimension()))
        throw Error(ErrorCode::InvalidInput, "point dimension " + std::to_string(u.dimension())
                                                 + " does not match polynomial dimension "
                                                 + std::to_string(w.dimension()));
}

double pairing(const Exponent& n, std::span<const double> u)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i)
        s += static_cast<double>(n[i]) * u[i];
    return s;
}

double guarded_pairing(const Exponent& n, std::span<const double> u)
{
    const double s = pairing(n, u);
    if (!(s <= kMaxLogExponent))
        throw Error(ErrorCode::OverflowRisk,
                    "<u,n> = " + std::to_string(s) + " exceeds " + std::to_string(kMaxLogExponent));
    return s;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int dimension, TermMap terms)
    : dimension_(dimension), terms_(std::move(terms))
{
    if (dimension_ < 1)
        throw Error(ErrorCode::InvalidInput, "dimension must be at least 1");
    if (terms_.empty())
        throw Error(ErrorCode::InvalidInput, "polynomial has no terms");
    exponents_.reserve(terms_.size());
    coefficients_.reserve(terms_.size());
    for (const auto& [n, a] : terms_) {
        if (n.size() != static_cast<std::size_t>(dimension_))
            throw Error(ErrorCode::InvalidInput, "exponent vector length differs from dimension");
        if (sgn(a) <= 0)
            throw Error(ErrorCode::NegativeCoefficient,
                        "coefficient " + to_string(a) + " is not strictly positive");
        exponents_.push_back(n);
        coefficients_.push_back(a.get_d());
    }
}

LaurentPolynomial LaurentPolynomial::from_terms(int dimension,
                                                const std::vector<std::pair<Exponent, Rational>>& terms)
{
    TermMap merged;
    for (const auto& [n, a] : terms)
        merged[n] += a;
    return LaurentPolynomial(dimension, std::move(merged));
}

LogPoint::LogPoint(std::vector<double> u) : u_(std::move(u))
{
    for (double x : u_)
        if (!std::isfinite(x))
            throw Error(ErrorCode::InvalidInput, "log point has a non-finite coordinate");
}

std::vector<double> LogPoint::multiplicative() const
{
    std::vector<double> x(u_.size());
    for (std::size_t i = 0; i < u_.size(); ++i)
        x[i] = std::exp(u_[i]);
    return x;
}

double evaluate_log(const LaurentPolynomial& w, const LogPoint& u)
{
    check_point(w, u);
    const auto& exps = w.exponents();
    const auto coeffs = w.coefficients();
    double value = 0.0;
    for (std::size_t t = 0; t < exps.size(); ++t)
        value += coeffs[t] * std::exp(guarded_pairing(exps[t], u.coords()));
    return value;
}

std::vector<double> gradient_log(const LaurentPolynomial& w, const LogPoint& u)
{
    return derivatives_log(w, u).gradient;
}

Matrix hessian_log(const LaurentPolynomial& w, const LogPoint& u)
{
    return derivatives_log(w, u).hessian;
}

LogDerivatives derivatives_log(const LaurentPolynomial& w, const LogPoint& u)
{
    check_point(w, u);
    const std::size_t d = static_cast<std::size_t>(w.dimension());
    LogDerivatives out;
    out.gradient.assign(d, 0.0);
    out.hessian = Matrix(d, d);
    const auto& exps = w.exponents();
    const auto coeffs = w.coefficients();
    for (std::size_t t = 0; t < exps.size(); ++t) {
        const Exponent& n = exps[t];
        const double term = coeffs[t] * std::exp(guarded_pairing(n, u.coords()));
        out.value += term;
        for (std::size_t i = 0; i < d; ++i) {
            if (n[i] == 0)
                continue;
            const double ti = term * n[i];
            out.gradient[i] += ti;
            for (std::size_t j = i; j < d; ++j)
                out.hessian(i, j) += ti * n[j];
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j)
            out.hessian(i, j) = out.hessian(j, i);
    return out;
}

double difference_log(const LaurentPolynomial& w, const LogPoint& u, std::span<const double> step)
{
    check_point(w, u);
    if (step.size() != u.dimension())
        throw Error(ErrorCode::InvalidInput, "step dimension mismatch");
    const auto& exps = w.exponents();
    const auto coeffs = w.coefficients();
    double diff = 0.0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
        const double base = pairing(exps[t], u.coords());
        const double delta = pairing(exps[t], step);
        if (!(base + delta <= kMaxLogExponent) || !(base <= kMaxLogExponent))
            throw Error(ErrorCode::OverflowRisk, "trial point leaves the overflow-safe region");
        diff += coeffs[t] * std::exp(base) * std::expm1(delta);
    }
    return diff;
}

BigInt determinant(const IntMatrix& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
    if (n == 0)
        return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];

    // Bareiss: every division below is exact.
    BigInt sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
        previous = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

LaurentPolynomial substitute_monomial(const LaurentPolynomial& w, const IntMatrix& m)
{
    const std::size_t d = static_cast<std::size_t>(w.dimension());
    if (m.size() != d)
        throw Error(ErrorCode::InvalidInput, "substitution matrix has wrong size");
    BigInt det = determinant(m);
    if (abs(det) != 1)
        throw Error(ErrorCode::NotUnimodular, "det M = " + det.get_str());

    LaurentPolynomial::TermMap out;
    for (const auto& [n, a] : w.terms()) {
        Exponent image(d);
        for (std::size_t i = 0; i < d; ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < d; ++j)
                s += static_cast<long long>(m[i][j]) * n[j];
            if (s > std::numeric_limits<int>::max() || s < std::numeric_limits<int>::min())
                throw Error(ErrorCode::InvalidInput, "substituted exponent out of range");
            image[i] = static_cast<int>(s);
        }
        out.emplace(std::move(image), a);
    }
    return LaurentPolynomial(w.dimension(), std::move(out));
}

LaurentPolynomial scale(const LaurentPolynomial& w, const Rational& c)
{
    if (sgn(c) <= 0)
        throw Error(ErrorCode::NegativeCoefficient, "scale factor must be positive");
    LaurentPolynomial::TermMap out;
    for (const auto& [n, a] : w.terms())
        out.emplace(n, Rational(a * c));
    return LaurentPolynomial(w.dimension(), std::move(out));
}

LaurentPolynomial rescale_variables(const LaurentPolynomial& w, std::span<const Rational> base)
{
    if (base.size() != static_cast<std::size_t>(w.dimension()))
        throw Error(ErrorCode::InvalidInput, "rescaling vector has wrong length");
    for (const auto& b : base)
        if (sgn(b) <= 0)
            throw Error(ErrorCode::NegativeCoefficient, "rescaling factors must be positive");

    LaurentPolynomial::TermMap out;
    for (const auto& [n, a] : w.terms()) {
        Rational c = a;
        for (std::size_t i = 0; i < n.size(); ++i) {
            const unsigned long e = static_cast<unsigned long>(n[i] < 0 ? -static_cast<long>(n[i]) : n[i]);
            BigInt num, den;
            mpz_pow_ui(num.get_mpz_t(), base[i].get_num_mpz_t(), e);
            mpz_pow_ui(den.get_mpz_t(), base[i].get_den_mpz_t(), e);
            Rational factor = n[i] >= 0 ? Rational(num, den) : Rational(den, num);
            factor.canonicalize();
            c *= factor;
        }
        out.emplace(n, c);
    }
    return LaurentPolynomial(w.dimension(), std::move(out));
}

std::string serialize(const LaurentPolynomial& w)
{
    std::string out;
    for (const auto& [n, a] : w.terms()) {
        if (!out.empty())
            out += " + ";
        std::string factors;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (n[i] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += 'x' + std::to_string(i + 1);
            if (n[i] != 1)
                factors += '^' + std::to_string(n[i]);
        }
        if (factors.empty())
            out += to_string(a);
        else if (a == 1)
            out += factors;
        else
            out += to_string(a) + '*' + factors;
    }
    return out;
}

}  // namespace conifold
