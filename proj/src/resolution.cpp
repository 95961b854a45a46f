#include "trimcx/resolution.hpp"

#include "trimcx/errors.hpp"

#include <algorithm>

namespace trimcx {

namespace {

GradedMap map_from_columns(const GradedFreeModule& target, const std::vector<int>& twists,
                           const std::vector<ModuleElement>& columns) {
    GradedMap m(GradedFreeModule{twists}, target);
    for (int j = 0; j < static_cast<int>(columns.size()); ++j)
        for (int i = 0; i < target.rank(); ++i) m.set(i, j, columns[j][i]);
    return m;
}

} // namespace

GradedMap syzygy_step(const GradedMap& phi, int degree_bound, bool check_completeness) {
    const GradedFreeModule& a = phi.source();
    std::vector<int> twists;
    std::vector<ModuleElement> columns;
    if (a.rank() == 0) return GradedMap(GradedFreeModule{}, a);
    const int start = *std::min_element(a.twists.begin(), a.twists.end());

    for (int d = start; d <= degree_bound; ++d) {
        const auto kernel = kernel_basis(phi.strand_matrix(d));
        if (kernel.empty()) continue;
        const GradedMap current = map_from_columns(a, twists, columns);
        const Matrix image = current.strand_matrix(d);
        if (rank(image) == static_cast<int>(kernel.size())) continue;

        IncrementalBasis span(a.strand_dim(d));
        for (int c = 0; c < image.cols(); ++c) span.insert(image.column(c));
        for (const auto& v : kernel) {
            if (span.size() == static_cast<int>(kernel.size())) break;
            if (!span.insert(v)) continue;
            twists.push_back(d);
            columns.push_back(element_from_strand(a, d, v));
        }
    }

    GradedMap psi = map_from_columns(a, twists, columns);
    if (check_completeness) {
        const int d = degree_bound + 1;
        const int kernel_dim = a.strand_dim(d) - rank(phi.strand_matrix(d));
        if (rank(psi.strand_matrix(d)) != kernel_dim)
            throw PreconditionError("syzygy_step: degree bound " + std::to_string(degree_bound) +
                                    " too small to capture all syzygies");
    }
    return psi;
}

std::optional<GradedMap> lift_through(const GradedMap& m, const GradedMap& target) {
    if (!(m.target() == target.target())) throw PreconditionError("lift_through: maps have different targets");
    GradedMap q(target.source(), m.source());
    for (int j = 0; j < target.source().rank(); ++j) {
        const int d = target.source().twists[j];
        const Vector rhs = strand_coordinates(target.target(), d, target.column(j));
        const auto sol = solve(m.strand_matrix(d), rhs);
        if (!sol) return std::nullopt;
        const ModuleElement e = element_from_strand(m.source(), d, *sol);
        for (int i = 0; i < m.source().rank(); ++i) q.set(i, j, e[i]);
    }
    return q;
}

GradedMap generator_map(const std::vector<HomogPoly>& gens) {
    GradedFreeModule f1;
    for (const auto& g : gens) f1.twists.push_back(g.degree());
    GradedMap d1(f1, GradedFreeModule{{0}});
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) d1.set(0, j, gens[j]);
    return d1;
}

ChainComplex minimal_free_resolution(const Ideal& ideal, const ResolutionOptions& opts) {
    const auto gens = minimal_generators(ideal);
    if (gens.empty()) throw NotArtinianError("the zero ideal does not define an Artinian ring");
    const int bound = opts.degree_bound > 0 ? opts.degree_bound : default_degree_bound(ideal);
    const int top_socle = artinian_vanishing_degree(ideal, bound) - 1;

    std::vector<GradedMap> diffs;
    diffs.push_back(generator_map(gens));
    // Generators of F_k live in degrees <= reg(R/I) + k = top_socle + k.
    for (int k = 2; k <= 4; ++k) {
        GradedMap next = syzygy_step(diffs.back(), top_socle + k);
        if (next.source().rank() == 0) break;
        if (k == 4) throw VerificationError("resolution of length > 3 in three variables");
        diffs.push_back(std::move(next));
    }
    ChainComplex res(GradedFreeModule{{0}}, std::move(diffs));
    if (!verify_complex(res)) throw VerificationError("computed resolution fails d^2 = 0");
    if (opts.verify_exactness && !is_strand_exact(res, top_socle + 4))
        throw VerificationError("computed resolution is not exact");
    return res;
}

ChainComplex buchsbaum_eisenbud(const SkewMatrix& m) {
    const int n = m.size();
    if (n % 2 == 0) throw PreconditionError("Buchsbaum-Eisenbud complex needs an odd-size skew matrix");
    const auto pf = signed_submaximal_pfaffians(m);

    std::vector<std::optional<int>> t1(n);
    for (int i = 0; i < n; ++i)
        if (!pf[i].is_zero()) t1[i] = pf[i].degree();

    // Every nonzero M[i][j] has degree sigma - t1[i] - t1[j], sigma = deg F_3.
    std::optional<int> sigma;
    for (int i = 0; i < n && !sigma; ++i)
        for (int j = 0; j < n && !sigma; ++j)
            if (!m(i, j).is_zero() && t1[i] && t1[j]) sigma = m(i, j).degree() + *t1[i] + *t1[j];
    if (!sigma) throw NotArtinianError("Pfaffian ideal is too degenerate to have grade 3");
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!t1[i] && t1[j] && !m(i, j).is_zero()) {
                    t1[i] = *sigma - m(i, j).degree() - *t1[j];
                    changed = true;
                }
    }
    GradedFreeModule f1, f2;
    for (int i = 0; i < n; ++i) {
        if (!t1[i]) throw PreconditionError("cannot assign a degree to Pfaffian " + std::to_string(i));
        f1.twists.push_back(*t1[i]);
        f2.twists.push_back(*sigma - *t1[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!m(i, j).is_zero() && m(i, j).degree() != *sigma - *t1[i] - *t1[j])
                throw PreconditionError("skew matrix entries are not degree-compatible");

    GradedMap d1(f1, GradedFreeModule{{0}});
    GradedMap d2(f2, f1);
    GradedMap d3(GradedFreeModule{{*sigma}}, f2);
    for (int i = 0; i < n; ++i) {
        d1.set(0, i, pf[i]);
        d3.set(i, 0, pf[i]);
        for (int j = 0; j < n; ++j) d2.set(i, j, m(i, j));
    }
    ChainComplex be(GradedFreeModule{{0}}, {d1, d2, d3});
    if (!verify_complex(be)) throw VerificationError("Buchsbaum-Eisenbud complex fails d^2 = 0");

    const Ideal pf_ideal(pf);
    int max_deg = 0;
    for (int t : f1.twists) max_deg = std::max(max_deg, t);
    // R/Pf(M) is Artinian iff it vanishes in degree sigma - 2 (its socle sits in sigma - 3)
    if (IdealStrands(pf_ideal, std::max(*sigma - 2, max_deg)).vanishing_degree() < 0)
        throw NotArtinianError("Pfaffian ideal has grade < 3");
    return be;
}

} // namespace trimcx
