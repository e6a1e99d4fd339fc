#ifndef ZONOTOPAL_LINALG_HPP
#define ZONOTOPAL_LINALG_HPP

#include "zonotopal/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zonotopal {

class DimensionError : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

class SingularMatrixError : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    /// Columns given as vectors of equal length `rows`.
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void swap_rows(std::size_t a, std::size_t b);

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& v) const;

    bool is_identity() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::string to_string(const Matrix& m);

/// Exact determinant by pivoted Gaussian elimination. Throws DimensionError if not square.
Rational determinant(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Unique solution of m x = rhs. Throws SingularMatrixError / DimensionError.
Vector solve(const Matrix& m, const Vector& rhs);

/// Inverse of a square invertible matrix.
Matrix inverse(const Matrix& m);

/// Reduced row-echelon form; pivot columns are the lowest possible indices.
/// If `pivots` is given it receives the pivot column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of the right nullspace, one vector per free column (in index order),
/// with the free variable set to 1 and the other free variables to 0.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// Rank of the span of the given vectors.
std::size_t rank_of_vectors(std::span<const Vector> vectors, std::size_t dim);

}  // namespace zonotopal

#endif
