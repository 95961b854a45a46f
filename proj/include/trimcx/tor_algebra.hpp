#pragma once

#include "trimcx/ideal.hpp"
#include "trimcx/inverse_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trimcx {

/// Element of K(x,y,z) ⊗ R/I of homological degree p and internal degree
/// `degree`: one coefficient per p-subset of {x,y,z} (lex order), each of
/// degree `degree - p` and kept in normal form modulo I.
struct KoszulChain {
    int p = 0;
    int degree = 0;
    std::vector<HomogPoly> coeffs;
};

/// Tor^R(R/I, k) as the homology of K ⊗ R/I, with cycle representatives and
/// the products induced by the exterior algebra structure of K.
class TorAlgebra {
public:
    /// Throws NotArtinianError if R/I does not vanish by `bound` (0 = default bound).
    explicit TorAlgebra(const Ideal& ideal, int bound = 0);

    int top_socle_degree() const { return top_; }
    /// dim T_p, with T_0 = k; T_p is listed by increasing internal degree.
    int dim(int p) const;
    int dim(int p, int degree) const;
    std::vector<int> degrees(int p) const;
    const KoszulChain& representative(int p, int index) const;

    KoszulChain zero_chain(int p, int degree) const;
    KoszulChain boundary(const KoszulChain& c) const;
    KoszulChain multiply(const KoszulChain& a, const KoszulChain& b) const;
    KoszulChain add(const KoszulChain& a, const KoszulChain& b) const;
    /// Coordinates of the class of a cycle in the T_p basis. Throws
    /// PreconditionError if `z` is not a cycle.
    Vector homology_class(const KoszulChain& z) const;

    /// Class of rep(p, i) * rep(q, j) in T_{p+q}.
    Vector product(int p, int i, int q, int j) const;

    /// dim of the span of all products T_1 * T_1 in T_2.
    int rank_T1T1() const;
    /// dim of the span T_1 * T_2 inside T_3.
    int dim_T1T2() const;
    /// Rank of T_2 -> Hom(T_1, T_3), f |-> (e |-> e f).
    int delta_rank() const;

private:
    struct Block {
        int degree = 0;
        int offset = 0;                 ///< position of the first class in the T_p basis
        std::vector<KoszulChain> reps;
        Matrix lift;                    ///< columns: chain coordinates of [reps | boundaries]
    };

    int hilbert_dim(int d) const;
    KoszulChain normalized(KoszulChain c) const;
    Vector coordinates(const KoszulChain& c) const;
    KoszulChain from_coordinates(int p, int degree, const Vector& v) const;
    const Block* block(int p, int degree) const;

    Ideal ideal_;
    int top_ = 0;
    IdealStrands strands_;
    std::vector<std::vector<Block>> blocks_; ///< blocks_[p], p = 0..3
};

/// The homology of K ⊗ R/I with its products.
TorAlgebra koszul_tor(const Ideal& ideal, int bound = 0);

int delta_rank(const TorAlgebra& t);

enum class TorVerdict { G, NotG };

struct ClassReport {
    int mu = 0;
    int type = 0;
    std::optional<int> ell;
    std::optional<int> s;
    int t1 = 0, t2 = 0, t3 = 0;
    int rank_T1T1 = 0;
    int rank_T1T2 = 0; ///< rank of T_1 ⊗ T_2 -> T_3
    int dim_T1T2 = 0;  ///< dim of the image T_1 · T_2
    int delta_rank = 0;
    TorVerdict verdict = TorVerdict::NotG;
    std::string reason; ///< failing condition when not G

    /// "G(r)" or "not-G (reason)".
    std::string verdict_string() const;
};

/// G(r) iff T_1 T_1 = 0, dim T_1 T_2 = 1 and r = delta_rank >= 2.
ClassReport classify_G(const TorAlgebra& t, const ArtinianProfile& profile);
ClassReport classify_G(const Ideal& ideal, const ArtinianProfile& profile, int bound = 0);
ClassReport classify_G(const Ideal& ideal, int bound = 0);

struct TorBoundsReport {
    int s = 0;
    int ell = 0;
    int b = 0;
    int mu = 0;
    int delta_rank = 0;
    int lower_bound = 0;          ///< mu - 3 ell
    bool lower_bound_holds = false;
    bool hypothesis = false;      ///< ell <= s + b - 1 - min(ell b, 3)
    bool equality_holds = false;  ///< delta_rank == mu - 3 ell (meaningful when hypothesis)
    bool verdict_holds = false;   ///< classified G(mu - 3 ell) (meaningful when hypothesis)
    int t1_s = 0, t1_s_expected = 0;     ///< s + 1 - ell
    int t2_s1 = 0, t2_s1_expected = 0;   ///< mu - s - 1 - 2 ell
    int t2_s2 = 0, t2_s2_expected = 0;   ///< s + 4 ell
    int t2_s2_euler = 0;                 ///< s + 1 + 3 ell, from the Hilbert series
    ClassReport report;

    bool bounds_ok() const;       ///< lower bound, and equality plus verdict under the hypothesis
    bool graded_ok() const;       ///< all three graded dimension counts
};

/// Checks the delta-rank bounds and the graded Tor counts on an instance
/// I ⊆ I_t with socle k(-s)^ell ⊕ k(-2s+1).
TorBoundsReport check_bounds(const Ideal& ideal, const Ideal& gorenstein, const ArtinianProfile& profile);

} // namespace trimcx
