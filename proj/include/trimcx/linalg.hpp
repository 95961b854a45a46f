#pragma once

#include "trimcx/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace trimcx {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_columns(int rows, const std::vector<Vector>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    Scalar operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    std::span<Scalar> row(int r) { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }
    std::span<const Scalar> row(int r) const {
        return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)};
    }

    Vector column(int c) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

namespace kernels {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row, in row order. The serial version is the reference the
// OpenMP version is tested against.
std::vector<int> rref_serial(Matrix& a);
std::vector<int> rref_parallel(Matrix& a);

/// Dispatches to the parallel kernel for matrices large enough to benefit.
std::vector<int> rref(Matrix& a);

} // namespace kernels

int rank(const Matrix& a);

/// Basis of {v : a v = 0}.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Some v with a v = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Determinant by elimination (square matrices).
Scalar determinant(Matrix a);

/// Growing set of linearly independent vectors kept in semi-echelon form:
/// row k is zero at the pivots of rows 0..k-1.
class IncrementalBasis {
public:
    explicit IncrementalBasis(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the current rows; the result is zero iff v is in the span.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    /// Adds v if independent; returns whether it was added.
    bool insert(const Vector& v);

    const std::vector<Vector>& rows() const { return rows_; }

private:
    int dim_;
    std::vector<Vector> rows_;
    std::vector<int> pivots_;
};

} // namespace trimcx
