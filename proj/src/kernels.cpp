#include "trimcx/linalg.hpp"

#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trimcx::kernels {

namespace {

using rep = Scalar::rep;

// row[j] -= f * pivot_row[j] for j >= from
inline void axpy_row(std::span<Scalar> row, std::span<const Scalar> pivot_row, Scalar f, int from) {
    const std::uint64_t p = Scalar::characteristic();
    const std::uint64_t neg_f = f.is_zero() ? 0 : p - f.value();
    for (std::size_t j = from; j < row.size(); ++j) {
        const rep pj = pivot_row[j].value();
        if (pj == 0) continue;
        row[j] = Scalar::from_rep(static_cast<rep>((row[j].value() + neg_f * pj) % p));
    }
}

inline void scale_row(std::span<Scalar> row, Scalar f, int from) {
    for (std::size_t j = from; j < row.size(); ++j) row[j] *= f;
}

inline void swap_rows(Matrix& a, int r1, int r2) {
    if (r1 == r2) return;
    auto x = a.row(r1);
    auto y = a.row(r2);
    for (std::size_t j = 0; j < x.size(); ++j) std::swap(x[j], y[j]);
}

// Finds a row >= start with a nonzero entry in column c.
inline int find_pivot(const Matrix& a, int start, int c) {
    for (int r = start; r < a.rows(); ++r)
        if (!a(r, c).is_zero()) return r;
    return -1;
}

constexpr long parallel_threshold = 64L * 64L;

} // namespace

std::vector<int> rref_serial(Matrix& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        const int p = find_pivot(a, r, c);
        if (p < 0) continue;
        swap_rows(a, r, p);
        scale_row(a.row(r), a(r, c).inverse(), c);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            axpy_row(a.row(i), a.row(r), a(i, c), c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<int> rref_parallel(Matrix& a) {
    std::vector<int> pivots;
    int r = 0;
    const int rows = a.rows();
    for (int c = 0; c < a.cols() && r < rows; ++c) {
        const int p = find_pivot(a, r, c);
        if (p < 0) continue;
        swap_rows(a, r, p);
        scale_row(a.row(r), a(r, c).inverse(), c);
        const int pivot_row = r;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < rows; ++i) {
            if (i == pivot_row || a(i, c).is_zero()) continue;
            axpy_row(a.row(i), a.row(pivot_row), a(i, c), c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<int> rref(Matrix& a) {
#ifdef _OPENMP
    if (omp_get_max_threads() > 1 && static_cast<long>(a.rows()) * a.cols() >= parallel_threshold)
        return rref_parallel(a);
#endif
    return rref_serial(a);
}

} // namespace trimcx::kernels
