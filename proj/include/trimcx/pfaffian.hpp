#pragma once

#include "trimcx/ideal.hpp"
#include "trimcx/poly.hpp"

#include <vector>

namespace trimcx {

using PolyMatrix = std::vector<std::vector<HomogPoly>>;

/// Skew-symmetric polynomial matrix: M[i][j] = -M[j][i], zero diagonal.
class SkewMatrix {
public:
    SkewMatrix() = default;
    /// Throws PreconditionError if not square, not skew, or diagonal nonzero.
    explicit SkewMatrix(PolyMatrix entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const HomogPoly& operator()(int i, int j) const { return entries_[i][j]; }
    const PolyMatrix& entries() const { return entries_; }
    bool has_unit_entry() const;

    /// Deletes row and column i.
    SkewMatrix deleted(int i) const;

private:
    PolyMatrix entries_;
};

/// Placement of the single nonzero entries of the border blocks O_{x^2}
/// (a column of length m) and ^{y^2}O / ^{y}O (a row of length m).
struct BorderConvention {
    bool x2_in_first_row = false;
    bool y_in_last_column = false;
};

/// x^2 in the last row of O_{x^2}, y^2 (or y) in the first slot of ^{y^2}O.
/// The only one of the four placements for which Pf(V_m^j) has the expected
/// Gorenstein Betti table for every m <= 4 (pfaffian tests enumerate all four).
inline constexpr BorderConvention default_border_convention{};

/// m x m matrix U_m^j, 0 <= j <= m.
PolyMatrix build_U(int m, int j);

/// (2m+1) x (2m+1) skew matrix V_m^j, 0 <= j <= m.
SkewMatrix build_V(int m, int j, BorderConvention conv = default_border_convention);

/// Pfaffian of an even-size skew matrix, expanded along row `row` at the top
/// level: Pf = sum_{k != row} (-1)^{row+k+1+[row>k]} M[row][k] Pf(M minus rows/cols row,k)
/// (0-based indices shifted to the usual 1-based signs).
HomogPoly pfaffian(const SkewMatrix& m, int row = 0);

/// Signed submaximal Pfaffians (-1)^i Pf(M minus row/col i), 0-based i.
std::vector<HomogPoly> signed_submaximal_pfaffians(const SkewMatrix& m);

/// The ideal they generate; n must be odd.
Ideal submax_pfaffians(const SkewMatrix& m);

} // namespace trimcx
