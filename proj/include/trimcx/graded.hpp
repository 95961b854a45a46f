#pragma once

#include "trimcx/linalg.hpp"
#include "trimcx/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace trimcx {

/// Basis element of a module strand: monomial m times the free generator `component`.
struct StrandIndex {
    int component;
    Monomial mono;
};

/// Matrix of a linear map between strands, with both bases spelled out.
struct StrandMatrix {
    Matrix values;
    std::vector<StrandIndex> rows;
    std::vector<StrandIndex> cols;
};

/// ⊕_i R(-twists[i]); order of summands is significant.
struct GradedFreeModule {
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }
    /// dim_k of the degree-d piece.
    int strand_dim(int d) const;
    /// Start of component i inside the degree-d strand coordinates.
    std::vector<int> strand_offsets(int d) const;
    std::vector<StrandIndex> strand_basis(int d) const;
    GradedFreeModule shifted(int s) const;

    friend GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);
    friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// An element of a free module: one homogeneous polynomial per summand, of
/// degree (element degree - twist).
using ModuleElement = std::vector<HomogPoly>;

Vector strand_coordinates(const GradedFreeModule& m, int d, const ModuleElement& e);
ModuleElement element_from_strand(const GradedFreeModule& m, int d, const Vector& v);

/// Degree-0 homomorphism source -> target given by a polynomial matrix; entry
/// (i, j) has degree source.twists[j] - target.twists[i].
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedFreeModule source, GradedFreeModule target);

    const GradedFreeModule& source() const { return source_; }
    const GradedFreeModule& target() const { return target_; }

    int forced_degree(int i, int j) const { return source_.twists[j] - target_.twists[i]; }
    const HomogPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }
    /// Throws PreconditionError if a nonzero f has the wrong degree.
    void set(int i, int j, const HomogPoly& f);

    ModuleElement column(int j) const;
    ModuleElement apply(const ModuleElement& e, int degree) const;

    Matrix strand_matrix(int d) const;
    StrandMatrix strand(int d) const;
    /// The map tensored with k: degree-0 entries as scalars.
    Matrix constant_part() const;
    bool is_zero() const;
    bool has_unit_entry() const;

    GradedMap operator-() const;
    friend GradedMap operator+(const GradedMap& f, const GradedMap& g);
    friend GradedMap operator-(const GradedMap& f, const GradedMap& g) { return f + (-g); }
    /// f ∘ g
    friend GradedMap compose(const GradedMap& f, const GradedMap& g);
    friend bool operator==(const GradedMap& f, const GradedMap& g);

    /// Copies `block` into this map at the given summand offsets, scaled by `sign`.
    void place(const GradedMap& block, int row_offset, int col_offset, Scalar sign = Scalar(1));

    GradedMap select_rows(const std::vector<int>& rows) const;
    GradedMap select_cols(const std::vector<int>& cols) const;

private:
    std::size_t index(int i, int j) const { return std::size_t(i) * source_.rank() + j; }

    GradedFreeModule source_;
    GradedFreeModule target_;
    std::vector<HomogPoly> entries_;
};

/// F_0 <- F_1 <- ... <- F_n with d_k : F_k -> F_{k-1}.
class ChainComplex {
public:
    ChainComplex() = default;
    /// Shapes are checked here; d∘d = 0 is checked by verify_complex.
    explicit ChainComplex(GradedFreeModule f0, std::vector<GradedMap> differentials = {});

    int length() const { return static_cast<int>(differentials_.size()); }
    /// F_k; the zero module outside 0..length.
    GradedFreeModule module(int k) const;
    /// d_k for 1 <= k <= length; a zero map otherwise.
    GradedMap differential(int k) const;
    const std::vector<GradedMap>& differentials() const { return differentials_; }

    /// Ranks of F_0.. with trailing zero modules dropped.
    std::vector<int> ranks() const;

private:
    GradedFreeModule f0_;
    std::vector<GradedMap> differentials_;
};

bool verify_complex(const ChainComplex& c);

/// Strand-rank exactness in homological degrees >= 1 for internal degrees <= max_degree:
/// rank(d_k)_j + rank(d_{k+1})_j = dim(F_k)_j.
bool is_strand_exact(const ChainComplex& c, int max_degree);

/// Chain map source -> target; components[k] : source.F_k -> target.F_k.
struct ComplexMorphism {
    ChainComplex source;
    ChainComplex target;
    std::vector<GradedMap> components;
};

bool commutes(const ComplexMorphism& alpha);

/// cone_k = source_{k-1} ⊕ target_k with differential [[-d_source, 0], [alpha, d_target]].
ChainComplex mapping_cone(const ComplexMorphism& alpha);

/// Cancels unit entries until every differential entry lies in R_+.
ChainComplex minimalize(const ChainComplex& c);

class BettiTable {
public:
    BettiTable() = default;

    int at(int i, int j) const;
    void add(int i, int j, int count = 1);
    /// Sum over internal degrees, for i = 0..max homological degree.
    std::vector<int> totals() const;
    const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

    /// Rows labeled j - i, columns 0..3 (or further), rows with no entries omitted.
    std::string render() const;
    /// `beta <i> <j> <rank>` lines, one per nonzero entry.
    std::string render_kv() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<std::pair<int, int>, int> entries_;
};

/// Betti numbers read off the twists; minimalizes first unless `minimal`.
BettiTable betti_table(const ChainComplex& c, bool minimal = false);

/// k[x,y,z] Koszul complex on (x, y, z). Basis of F_k: k-subsets in lex order.
ChainComplex koszul_complex();

} // namespace trimcx
