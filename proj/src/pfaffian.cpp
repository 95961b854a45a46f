#include "trimcx/pfaffian.hpp"

#include "trimcx/errors.hpp"

#include <cstdint>
#include <unordered_map>

namespace trimcx {

SkewMatrix::SkewMatrix(PolyMatrix entries) : entries_(std::move(entries)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries_[i].size()) != n) throw PreconditionError("skew matrix must be square");
        if (!entries_[i][i].is_zero()) throw PreconditionError("skew matrix has a nonzero diagonal entry");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(entries_[i][j] == -entries_[j][i]))
                throw PreconditionError("matrix is not skew-symmetric at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
}

bool SkewMatrix::has_unit_entry() const {
    for (const auto& row : entries_)
        for (const auto& f : row)
            if (!f.is_zero() && f.degree() == 0) return true;
    return false;
}

SkewMatrix SkewMatrix::deleted(int k) const {
    PolyMatrix out;
    for (int i = 0; i < size(); ++i) {
        if (i == k) continue;
        std::vector<HomogPoly> row;
        for (int j = 0; j < size(); ++j)
            if (j != k) row.push_back(entries_[i][j]);
        out.push_back(std::move(row));
    }
    return SkewMatrix(std::move(out));
}

PolyMatrix build_U(int m, int j) {
    if (m < 1 || j < 0 || j > m)
        throw PreconditionError("build_U needs m >= 1 and 0 <= j <= m, got m=" + std::to_string(m) +
                                ", j=" + std::to_string(j));
    const HomogPoly x = HomogPoly::variable(0);
    const HomogPoly y = HomogPoly::variable(1);
    const HomogPoly z = HomogPoly::variable(2);
    PolyMatrix u(m, std::vector<HomogPoly>(m));
    for (int i = 1; i <= m; ++i) {
        const bool quadratic = i <= m - j;
        const HomogPoly row_entries[3] = {quadratic ? x * x : x, quadratic ? z * z : z, quadratic ? y * y : y};
        const int deg = quadratic ? 2 : 1;
        for (auto& f : u[i - 1]) f = HomogPoly(deg);
        for (int k = 0; k < 3; ++k) {
            const int col = m - i + k; // columns m-i, m-i+1, m-i+2 (1-based)
            if (col >= 1 && col <= m) u[i - 1][col - 1] = row_entries[k];
        }
    }
    return u;
}

SkewMatrix build_V(int m, int j, BorderConvention conv) {
    const PolyMatrix u = build_U(m, j);
    const int n = 2 * m + 1;
    PolyMatrix v(n, std::vector<HomogPoly>(n));
    const auto put = [&](int a, int b, const HomogPoly& f) {
        v[a][b] = f;
        v[b][a] = -f;
    };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (!u[b][a].is_zero()) put(a, m + 1 + b, u[b][a]);
    const HomogPoly x = HomogPoly::variable(0);
    const HomogPoly y = HomogPoly::variable(1);
    put(conv.x2_in_first_row ? 0 : m - 1, m, x * x);
    put(m, m + 1 + (conv.y_in_last_column ? m - 1 : 0), j == m ? y : y * y);
    return SkewMatrix(std::move(v));
}

namespace {

class PfaffianExpander {
public:
    explicit PfaffianExpander(const SkewMatrix& m) : m_(m) {}

    // Pf of the principal submatrix on the index set `mask`, expanded along its smallest index.
    HomogPoly pf(std::uint64_t mask) {
        if (mask == 0) return HomogPoly::constant(Scalar(1));
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        int first = 0;
        while (!(mask >> first & 1)) ++first;
        const std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
        HomogPoly acc;
        bool started = false;
        int position = 0; // position of k among the remaining indices
        for (int k = first + 1; k < m_.size(); ++k) {
            if (!(rest >> k & 1)) continue;
            ++position;
            const HomogPoly& a = m_(first, k);
            if (a.is_zero()) continue;
            HomogPoly term = a * pf(rest & ~(std::uint64_t{1} << k));
            if (position % 2 == 0) term = -term;
            if (!started) {
                acc = term;
                started = true;
            } else {
                acc += term;
            }
        }
        memo_.emplace(mask, acc);
        return acc;
    }

private:
    const SkewMatrix& m_;
    std::unordered_map<std::uint64_t, HomogPoly> memo_;
};

} // namespace

HomogPoly pfaffian(const SkewMatrix& m, int row) {
    const int n = m.size();
    if (n % 2 != 0) throw PreconditionError("pfaffian needs an even-size matrix");
    if (n > 62) throw PreconditionError("pfaffian: matrix too large");
    if (n == 0) return HomogPoly::constant(Scalar(1));
    if (row < 0 || row >= n) throw PreconditionError("pfaffian: expansion row out of range");
    PfaffianExpander ex(m);
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    const std::uint64_t rest = all & ~(std::uint64_t{1} << row);
    HomogPoly acc;
    bool started = false;
    for (int k = 0; k < n; ++k) {
        if (k == row || m(row, k).is_zero()) continue;
        // 1-based: (-1)^{i+j+1+[i>j]} with i = row+1, j = k+1
        const int exponent = (row + 1) + (k + 1) + 1 + (row > k ? 1 : 0);
        HomogPoly term = m(row, k) * ex.pf(rest & ~(std::uint64_t{1} << k));
        if (exponent % 2 != 0) term = -term;
        if (!started) {
            acc = term;
            started = true;
        } else {
            acc += term;
        }
    }
    return acc;
}

std::vector<HomogPoly> signed_submaximal_pfaffians(const SkewMatrix& m) {
    if (m.size() % 2 == 0) throw PreconditionError("submaximal pfaffians need an odd-size matrix");
    std::vector<HomogPoly> out;
    for (int i = 0; i < m.size(); ++i) {
        HomogPoly p = pfaffian(m.deleted(i));
        if (i % 2 != 0) p = -p;
        out.push_back(p);
    }
    return out;
}

Ideal submax_pfaffians(const SkewMatrix& m) { return Ideal(signed_submaximal_pfaffians(m)); }

} // namespace trimcx
