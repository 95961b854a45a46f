#include "trimcx/linalg.hpp"

#include "trimcx/errors.hpp"

#include <string>

namespace trimcx {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vector>& columns) {
    Matrix m(rows, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (static_cast<int>(columns[c].size()) != rows)
            throw PreconditionError("column length mismatch in Matrix::from_columns");
        for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(int c) const {
    Vector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (Scalar s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw PreconditionError("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
}

int rank(const Matrix& a) {
    Matrix m = a;
    return static_cast<int>(kernels::rref(m).size());
}

std::vector<Vector> kernel_basis(const Matrix& a) {
    Matrix m = a;
    const auto pivots = kernels::rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(a.cols());
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw PreconditionError("solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = kernels::rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), a.cols());
    return x;
}

Scalar determinant(Matrix a) {
    if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
    const int n = a.rows();
    Scalar det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!a(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return Scalar(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        const Scalar inv = a(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            const Scalar f = a(r, c) * inv;
            if (f.is_zero()) continue;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

Vector IncrementalBasis::reduce(Vector v) const {
    if (static_cast<int>(v.size()) != dim_) throw PreconditionError("IncrementalBasis: wrong vector length");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar f = v[pivots_[k]];
        if (f.is_zero()) continue;
        const Vector& row = rows_[k];
        for (int j = 0; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

bool IncrementalBasis::contains(const Vector& v) const {
    for (Scalar s : reduce(v))
        if (!s.is_zero()) return false;
    return true;
}

bool IncrementalBasis::insert(const Vector& v) {
    Vector w = reduce(v);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (!w[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    const Scalar inv = w[pivot].inverse();
    for (Scalar& s : w) s *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

} // namespace trimcx
