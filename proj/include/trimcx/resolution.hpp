#pragma once

#include "trimcx/graded.hpp"
#include "trimcx/ideal.hpp"
#include "trimcx/pfaffian.hpp"

#include <optional>

namespace trimcx {

/// A minimal generating map onto ker(phi) through internal degree
/// `degree_bound`. New generators in degree d are kernel vectors independent
/// of the R-multiples of lower-degree syzygies, so the result has no unit
/// entries. With `check_completeness`, throws PreconditionError unless the
/// kernel is already generated in degree degree_bound + 1.
GradedMap syzygy_step(const GradedMap& phi, int degree_bound, bool check_completeness = true);

/// Some q : X -> A with m ∘ q = target, where m : A -> B and target : X -> B.
/// Returns nullopt if some column of `target` is not in the image of m.
std::optional<GradedMap> lift_through(const GradedMap& m, const GradedMap& target);

/// Row map F_1 -> R sending the basis to the given generators.
GradedMap generator_map(const std::vector<HomogPoly>& gens);

struct ResolutionOptions {
    /// Degree bound for the Artinian test; 0 selects default_degree_bound.
    int degree_bound = 0;
    /// Check strand-rank exactness of the result in every degree.
    bool verify_exactness = true;
};

/// Minimal graded free resolution of R/I (length <= 3). The first
/// differential uses the minimal generators in input order. Throws
/// NotArtinianError for non-Artinian input.
ChainComplex minimal_free_resolution(const Ideal& ideal, const ResolutionOptions& opts = {});

/// R <- R^n <- R^n <- R with d_1 the signed submaximal Pfaffians, d_2 = M and
/// d_3 = d_1^T. Throws PreconditionError for even size or inconsistent
/// degrees, NotArtinianError when Pf(M) has grade < 3.
ChainComplex buchsbaum_eisenbud(const SkewMatrix& m);

} // namespace trimcx
