#pragma once

#include "trimcx/graded.hpp"
#include "trimcx/linalg.hpp"
#include "trimcx/poly.hpp"

#include <vector>

namespace trimcx {

/// Homogeneous ideal of k[x,y,z] given by a (not necessarily minimal) generator list.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::vector<HomogPoly> generators);

    const std::vector<HomogPoly>& generators() const { return gens_; }
    int max_generator_degree() const;
    int min_generator_degree() const;

    /// The irrelevant ideal (x, y, z).
    static Ideal irrelevant();

private:
    std::vector<HomogPoly> gens_;
};

/// Columns are the monomial multiples m * g_i landing in degree d; the column
/// space is I_d.
StrandMatrix strand_multiplication_matrix(const std::vector<HomogPoly>& gens, int d);

/// A subspace of R_d kept in reduced row echelon form.
class StrandSpace {
public:
    StrandSpace() = default;
    StrandSpace(int degree, const std::vector<Vector>& spanning);

    int degree() const { return degree_; }
    int ambient_dim() const { return strand_dim(degree_); }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Fully reduced representative of v modulo the subspace.
    Vector normal_form(Vector v) const;
    bool contains(const Vector& v) const;
    /// Strand indices of the non-pivot monomials: a basis of R_d / subspace.
    const std::vector<int>& standard_monomials() const { return standard_; }
    /// Coordinates of v + subspace in the standard-monomial basis.
    Vector quotient_coordinates(const Vector& v) const;

    friend bool operator==(const StrandSpace& a, const StrandSpace& b) {
        return a.degree_ == b.degree_ && a.basis_ == b.basis_;
    }

private:
    int degree_ = 0;
    std::vector<Vector> basis_;
    std::vector<int> pivots_;
    std::vector<int> standard_;
};

/// Strands I_0..I_max of an ideal, built degree by degree from R_1 * I_{d-1}
/// plus the generators of degree d.
class IdealStrands {
public:
    IdealStrands(const Ideal& ideal, int max_degree);

    int max_degree() const { return static_cast<int>(strands_.size()) - 1; }
    const StrandSpace& operator[](int d) const { return strands_.at(d); }
    /// dim_k (R/I)_d.
    int hilbert(int d) const { return strands_.at(d).ambient_dim() - strands_.at(d).dim(); }
    std::vector<int> hilbert_function() const;
    /// Least d <= max_degree with (R/I)_d = 0, or -1.
    int vanishing_degree() const;

private:
    std::vector<StrandSpace> strands_;
};

/// R_1 * V inside R_{d+1}, spanned by x v, y v, z v.
std::vector<Vector> multiply_by_linear_forms(int d, const std::vector<Vector>& vs);

/// Index of x_var * m in degree d+1 for m at `index` in degree d.
int shift_index(int index, int var);

/// Subsequence of the generators that minimally generates the ideal; input order kept.
std::vector<HomogPoly> minimal_generators(const Ideal& ideal);

/// Count of minimal generators.
int mu(const Ideal& ideal);

/// Degree bound used when nothing else is known: 4 * max generator degree.
int default_degree_bound(const Ideal& ideal);

/// Least degree past which R/I vanishes (the top socle degree + 1). Throws
/// NotArtinianError if H(d) > 0 for all d <= bound.
int artinian_vanishing_degree(const Ideal& ideal, int bound);

/// Strandwise equality I_d = J_d for all d <= max_degree.
bool ideals_equal(const Ideal& i, const Ideal& j, int max_degree);

} // namespace trimcx
