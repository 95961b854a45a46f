#pragma once

#include "trimcx/graded.hpp"
#include "trimcx/ideal.hpp"

#include <vector>

namespace trimcx {

/// A resolution F of R/I with chosen rank-one summands e_0^i of F_1, ideals
/// a_i with d_0^i(F_2) ⊆ a_i e_0^i, resolutions G^i of R/a_i, and the lifts q_k^i.
///
/// G^i is stored twisted by deg d_1(e_0^i), so m_1^i lands in R(-deg d_1(e_0^i))
/// and every map in the trimming diagram has degree 0.
struct TrimmingData {
    ChainComplex F;
    std::vector<int> split;           ///< 0-based indices of the e_0^i in F_1
    std::vector<int> keep;            ///< the remaining indices, spanning F_1'
    std::vector<Ideal> a;
    std::vector<ChainComplex> G;      ///< twisted resolutions of R/a_i
    GradedMap d2_prime;               ///< F_2 -> F_1'
    std::vector<GradedMap> d0;        ///< d_0^i' : F_2 -> R(-deg d_1(e_0^i))
    std::vector<std::vector<GradedMap>> q; ///< q[i][k-1] = q_k^i : F_{k+1} -> G^i_k

    int count() const { return static_cast<int>(split.size()); }
    /// deg d_1(e_0^i).
    int split_twist(int i) const;
    /// q_k for all i stacked: F_{k+1} -> ⊕ G^i_k.
    GradedMap stacked_q(int k) const;
};

/// Decomposes d_2 by rows; a and G are left empty.
TrimmingData split_summands(const ChainComplex& f, const std::vector<int>& indices);

/// Attaches a_i with resolution G^i (untwisted, G^i_0 = R) and checks
/// d_0^i(F_2) ⊆ a_i e_0^i strandwise; throws PreconditionError otherwise.
void attach_ideals(TrimmingData& t, const std::vector<Ideal>& a, const std::vector<ChainComplex>& g);

/// a_i = R_+ resolved by the Koszul complex for every i.
void attach_irrelevant(TrimmingData& t);

/// q_1^i with m_1^i ∘ q_1^i = d_0^i'. Throws PreconditionError if no lift exists.
void lift_q1(TrimmingData& t);

/// q_k^i with m_k^i ∘ q_k^i = q_{k-1}^i ∘ d_{k+1}, for all k >= 2 that F allows.
void lift_qk(TrimmingData& t);

/// split_summands, attach_irrelevant (or the given a_i, resolved minimally), and all lifts.
TrimmingData prepare_trimming(const ChainComplex& f, const std::vector<int>& indices);
TrimmingData prepare_trimming(const ChainComplex& f, const std::vector<int>& indices,
                              const std::vector<Ideal>& a);

/// The top row of the trimming diagram: F_1' <- F_2 <- F_3 <- ...
ChainComplex trimming_top(const TrimmingData& t);
/// The bottom row: R <- ⊕ G^i_1 <- ⊕ G^i_2 <- ...
ChainComplex trimming_bottom(const TrimmingData& t);
ComplexMorphism trimming_morphism(const TrimmingData& t);

/// The trimmed ideal K' + a_1 K_0^1 + ... + a_m K_0^m as a generator list.
Ideal trimmed_ideal(const TrimmingData& t);

/// Mapping cone of trimming_morphism. Checks d^2 = 0 and that the image of
/// the first differential is trimmed_ideal(t); throws VerificationError otherwise.
ChainComplex trimming_complex(const TrimmingData& t);

/// Graded Betti numbers of R/J from the ranks of F, G^i and the q_k ⊗ k.
/// Requires F and every G^i minimal.
BettiTable trimmed_betti(const TrimmingData& t);

/// (kept generators) + a_i * (cut generator i); `cut` and `keep` index the
/// generator list. With empty `a` every a_i is R_+.
Ideal trim_ideal(const Ideal& i, const std::vector<int>& keep, const std::vector<int>& cut,
                 const std::vector<Ideal>& a = {});

} // namespace trimcx
