#ifndef CONIFOLD_LINALG_HPP
#define CONIFOLD_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace conifold {

/// Small dense row-major matrix. The solver works with d x d Hessians where
/// d is the number of variables, so nothing here is tuned for size.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double trace() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Lower-triangular L with A = L L^T, or nullopt if a pivot is not strictly
/// positive (A is not numerically positive definite).
std::optional<Matrix> cholesky(const Matrix& a);

/// Solves L L^T x = b.
std::vector<double> cholesky_solve(const Matrix& lower, std::span<const double> b);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

double sup_norm(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace conifold

#endif
