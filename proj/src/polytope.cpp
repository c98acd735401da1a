#include "conifold/polytope.hpp"

#include "conifold/errors.hpp"
#include "conifold/exact_lp.hpp"

namespace conifold {

int integer_rank(const std::vector<Exponent>& rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<BigInt>> a;
    a.reserve(rows.size());
    for (const auto& r : rows)
        a.emplace_back(r.begin(), r.end());

    // Bareiss elimination with column pivoting by search; divisions exact.
    BigInt previous = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0)
            ++pivot;
        if (pivot == a.size())
            continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / previous;
            a[i][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<std::vector<BigInt>> integer_kernel_vector(const std::vector<Exponent>& rows, int dimension)
{
    const std::size_t d = static_cast<std::size_t>(dimension);
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows)
        a.emplace_back(r.begin(), r.end());

    // Reduced row echelon form over Q.
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && sgn(a[p][col]) == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[row], a[p]);
        const Rational lead = a[row][col];
        for (auto& v : a[row])
            v /= lead;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || sgn(a[i][col]) == 0)
                continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < d; ++j)
                a[i][j] -= f * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    if (pivot_cols.size() == d)
        return std::nullopt;

    std::size_t free_col = 0;
    for (std::size_t k = 0; free_col < d; ++free_col) {
        if (k < pivot_cols.size() && pivot_cols[k] == free_col)
            ++k;
        else
            break;
    }
    std::vector<Rational> v(d, 0);
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
        v[pivot_cols[k]] = -a[k][free_col];
    return primitive_integer_vector(v);
}

namespace {

// max eps  s.t.  sum_n (mu_n + eps) n = 0,  sum_n (mu_n + eps) = 1,
//                mu >= 0, eps >= 0.
// Variables: mu_0..mu_{m-1}, eps.
LinearProgram margin_program(const std::vector<Exponent>& exps, int dimension)
{
    const std::size_t m = exps.size();
    const std::size_t d = static_cast<std::size_t>(dimension);
    LinearProgram lp;
    lp.a.assign(d + 1, std::vector<Rational>(m + 1, 0));
    lp.b.assign(d + 1, 0);
    lp.c.assign(m + 1, 0);
    lp.c[m] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        Rational column_sum = 0;
        for (std::size_t t = 0; t < m; ++t) {
            lp.a[i][t] = exps[t][i];
            column_sum += exps[t][i];
        }
        lp.a[i][m] = column_sum;
    }
    for (std::size_t t = 0; t < m; ++t)
        lp.a[d][t] = 1;
    lp.a[d][m] = static_cast<long>(m);
    lp.b[d] = 1;
    return lp;
}

// Find v with <v, n> <= 0 for all n and sum_n <v, n> = -1.
// Variables: p (d), q (d), slack s (m); v = p - q.
std::optional<std::vector<BigInt>> separating_direction(const std::vector<Exponent>& exps, int dimension)
{
    const std::size_t m = exps.size();
    const std::size_t d = static_cast<std::size_t>(dimension);
    LinearProgram lp;
    const std::size_t vars = 2 * d + m;
    lp.a.assign(m + 1, std::vector<Rational>(vars, 0));
    lp.b.assign(m + 1, 0);
    lp.c.assign(vars, 0);
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t i = 0; i < d; ++i) {
            lp.a[t][i] = exps[t][i];
            lp.a[t][d + i] = -exps[t][i];
            lp.a[m][i] += exps[t][i];
            lp.a[m][d + i] -= exps[t][i];
        }
        lp.a[t][2 * d + t] = 1;
    }
    lp.b[m] = -1;

    LpResult r = solve_lp(lp);
    if (r.status != LpStatus::Optimal)
        return std::nullopt;
    std::vector<Rational> v(d);
    for (std::size_t i = 0; i < d; ++i)
        v[i] = r.x[i] - r.x[d + i];
    return primitive_integer_vector(v);
}

}  // namespace

SupportValidation validate_support(const LaurentPolynomial& w)
{
    const auto& exps = w.exponents();
    SupportValidation out;
    out.dimension = w.dimension();
    out.linear_rank = integer_rank(exps);

    std::vector<Exponent> differences;
    for (std::size_t t = 1; t < exps.size(); ++t) {
        Exponent diff(exps[t].size());
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff[i] = exps[t][i] - exps[0][i];
        differences.push_back(std::move(diff));
    }
    out.polytope_dim = integer_rank(differences);

    LpResult margin = solve_lp(margin_program(exps, w.dimension()));
    if (margin.status == LpStatus::Optimal)
        out.interior_margin = margin.objective;

    out.origin_interior = out.interior_margin && sgn(*out.interior_margin) > 0
                          && out.linear_rank == w.dimension();
    if (out.origin_interior) {
        const std::size_t m = exps.size();
        for (std::size_t t = 0; t < m; ++t)
            out.certificate.emplace(exps[t], Rational(margin.x[t] + margin.x[m]));
        return out;
    }

    out.failure_direction = separating_direction(exps, w.dimension());
    if (!out.failure_direction)
        out.failure_direction = integer_kernel_vector(exps, w.dimension());
    return out;
}

bool certificate_holds(const SupportValidation& validation)
{
    if (validation.certificate.empty())
        return false;
    const std::size_t d = static_cast<std::size_t>(validation.dimension);
    Rational total = 0;
    std::vector<Rational> barycentre(d, 0);
    for (const auto& [n, lambda] : validation.certificate) {
        if (sgn(lambda) <= 0 || n.size() != d)
            return false;
        total += lambda;
        for (std::size_t i = 0; i < d; ++i)
            barycentre[i] += lambda * n[i];
    }
    if (total != 1)
        return false;
    for (const auto& c : barycentre)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool failure_direction_holds(const SupportValidation& validation, const LaurentPolynomial& w)
{
    if (!validation.failure_direction)
        return false;
    const auto& v = *validation.failure_direction;
    bool nonzero = false;
    for (const auto& x : v)
        nonzero = nonzero || x != 0;
    if (!nonzero || v.size() != static_cast<std::size_t>(w.dimension()))
        return false;
    for (const auto& n : w.exponents()) {
        BigInt s = 0;
        for (std::size_t i = 0; i < n.size(); ++i)
            s += v[i] * n[i];
        if (s > 0)
            return false;
    }
    return true;
}

NonvanishingCertificate nonvanishing_certificate(const SupportValidation& validation)
{
    if (!validation.origin_interior || validation.certificate.empty())
        throw Error(ErrorCode::NoCertificate, "origin is not interior to the Newton polytope");

    std::vector<Rational> lambdas;
    for (const auto& entry : validation.certificate)
        lambdas.push_back(entry.second);
    std::vector<BigInt> scaled = primitive_integer_vector(lambdas);

    NonvanishingCertificate out;
    BigInt period = 0;
    std::size_t k = 0;
    for (const auto& entry : validation.certificate) {
        period += scaled[k];
        out.weights.emplace(entry.first, scaled[k]);
        ++k;
    }
    if (!period.fits_slong_p())
        throw Error(ErrorCode::InvalidInput, "nonvanishing period does not fit a machine integer");
    out.period = period.get_si();
    return out;
}

}  // namespace conifold
