#include "conifold/exact_lp.hpp"

#include "conifold/errors.hpp"

#include <optional>

namespace conifold {

namespace {

class Tableau {
public:
    // Columns [0, n) are structural, [n, n + m) artificial, last is rhs.
    Tableau(const LinearProgram& lp) : m_(lp.b.size()), n_(lp.c.size()), width_(m_ + n_)
    {
        rows_.assign(m_, std::vector<Rational>(n_ + m_ + 1));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = sgn(lp.b[i]) < 0;
            for (std::size_t j = 0; j < n_; ++j)
                rows_[i][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i][rhs()] = flip ? Rational(-lp.b[i]) : lp.b[i];
            basis_[i] = n_ + i;
        }
    }

    // Minimizes the given cost over the current basis; columns >= limit are
    // never allowed to enter. Returns false if unbounded.
    bool minimize(const std::vector<Rational>& cost, std::size_t limit)
    {
        while (true) {
            std::vector<Rational> reduced = reduced_costs(cost);
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < limit; ++j) {
                if (sgn(reduced[j]) < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering)
                return true;

            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(rows_[i][*entering]) <= 0)
                    continue;
                Rational ratio = rows_[i][rhs()] / rows_[i][*entering];
                if (!leaving || ratio < best_ratio
                    || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving)
                return false;
            pivot(*leaving, *entering);
        }
    }

    // After phase one: pivot zero-level artificials out of the basis or drop
    // their (redundant) rows.
    void expel_artificials()
    {
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::optional<std::size_t> column;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(rows_[i][j]) != 0) {
                    column = j;
                    break;
                }
            }
            if (column) {
                pivot(i, *column);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            }
        }
    }

    Rational objective(const std::vector<Rational>& cost) const
    {
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i)
            v += cost[basis_[i]] * rows_[i][rhs()];
        return v;
    }

    std::vector<Rational> solution() const
    {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                x[basis_[i]] = rows_[i][rhs()];
        return x;
    }

private:
    std::size_t rhs() const noexcept { return width_; }

    std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const
    {
        const std::size_t cols = rhs();
        std::vector<Rational> r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Rational z = 0;
            for (std::size_t i = 0; i < m_; ++i)
                if (sgn(rows_[i][j]) != 0)
                    z += cost[basis_[i]] * rows_[i][j];
            r[j] = cost[j] - z;
        }
        return r;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational p = rows_[row][col];
        for (auto& v : rows_[row])
            v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || sgn(rows_[i][col]) == 0)
                continue;
            const Rational f = rows_[i][col];
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (sgn(rows_[row][j]) != 0)
                    rows_[i][j] -= f * rows_[row][j];
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp)
{
    const std::size_t m = lp.b.size();
    const std::size_t n = lp.c.size();
    if (lp.a.size() != m)
        throw Error(ErrorCode::InvalidInput, "LP: row count mismatch");
    for (const auto& row : lp.a)
        if (row.size() != n)
            throw Error(ErrorCode::InvalidInput, "LP: column count mismatch");

    Tableau tableau(lp);

    // Phase one: minimize the sum of artificials.
    std::vector<Rational> phase_one(n + m, 0);
    for (std::size_t i = 0; i < m; ++i)
        phase_one[n + i] = 1;
    tableau.minimize(phase_one, n + m);
    LpResult result;
    if (sgn(tableau.objective(phase_one)) != 0) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    tableau.expel_artificials();

    // Phase two: maximize c, i.e. minimize -c, artificials barred.
    std::vector<Rational> phase_two(n + m, 0);
    for (std::size_t j = 0; j < n; ++j)
        phase_two[j] = -lp.c[j];
    if (!tableau.minimize(phase_two, n)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x = tableau.solution();
    result.objective = -tableau.objective(phase_two);
    return result;
}

}  // namespace conifold
