#include "trimcx/trimming.hpp"

#include "trimcx/errors.hpp"
#include "trimcx/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trimcx {

namespace {

GradedMap shifted_map(const GradedMap& m, int t) {
    GradedMap r(m.source().shifted(t), m.target().shifted(t));
    for (int i = 0; i < m.target().rank(); ++i)
        for (int j = 0; j < m.source().rank(); ++j) r.set(i, j, m(i, j));
    return r;
}

ChainComplex shifted_complex(const ChainComplex& c, int t) {
    std::vector<GradedMap> diffs;
    for (const auto& d : c.differentials()) diffs.push_back(shifted_map(d, t));
    return ChainComplex(c.module(0).shifted(t), std::move(diffs));
}

bool is_minimal(const ChainComplex& c) {
    return std::none_of(c.differentials().begin(), c.differentials().end(),
                        [](const GradedMap& d) { return d.has_unit_entry(); });
}

// rank of (f ⊗ k) restricted to source summands of twist j, for every j.
std::map<int, int> graded_constant_rank(const GradedMap& f) {
    std::map<int, std::vector<int>> by_twist;
    for (int c = 0; c < f.source().rank(); ++c) by_twist[f.source().twists[c]].push_back(c);
    const Matrix k = f.constant_part();
    std::map<int, int> out;
    for (const auto& [twist, cols] : by_twist) {
        Matrix sub(k.rows(), static_cast<int>(cols.size()));
        for (int r = 0; r < k.rows(); ++r)
            for (int c = 0; c < static_cast<int>(cols.size()); ++c) sub(r, c) = k(r, cols[c]);
        if (const int rk = rank(sub); rk > 0) out[twist] = rk;
    }
    return out;
}

Ideal image_ideal(const GradedMap& row) {
    std::vector<HomogPoly> gens;
    for (int j = 0; j < row.source().rank(); ++j)
        if (!row(0, j).is_zero()) gens.push_back(row(0, j));
    return Ideal(std::move(gens));
}

} // namespace

int TrimmingData::split_twist(int i) const { return F.module(1).twists[split[i]]; }

GradedMap TrimmingData::stacked_q(int k) const {
    GradedFreeModule target;
    for (const auto& g : G) target = direct_sum(target, g.module(k));
    GradedMap out(F.module(k + 1), target);
    int offset = 0;
    for (int i = 0; i < count(); ++i) {
        if (k >= 1 && k - 1 < static_cast<int>(q[i].size())) out.place(q[i][k - 1], offset, 0);
        offset += G[i].module(k).rank();
    }
    return out;
}

TrimmingData split_summands(const ChainComplex& f, const std::vector<int>& indices) {
    const int n = f.module(1).rank();
    std::set<int> seen;
    for (int i : indices) {
        if (i < 0 || i >= n) throw PreconditionError("split index " + std::to_string(i) + " out of range");
        if (!seen.insert(i).second) throw PreconditionError("split indices must be distinct");
    }
    TrimmingData t;
    t.F = f;
    t.split = indices;
    for (int i = 0; i < n; ++i)
        if (!seen.count(i)) t.keep.push_back(i);
    const GradedMap d2 = f.differential(2);
    t.d2_prime = d2.select_rows(t.keep);
    for (int i : indices) t.d0.push_back(d2.select_rows({i}));
    return t;
}

void attach_ideals(TrimmingData& t, const std::vector<Ideal>& a, const std::vector<ChainComplex>& g) {
    if (static_cast<int>(a.size()) != t.count() || static_cast<int>(g.size()) != t.count())
        throw PreconditionError("need one ideal and one resolution per split summand");
    t.a = a;
    t.G.clear();
    for (int i = 0; i < t.count(); ++i) {
        const int tw = t.split_twist(i);
        t.G.push_back(shifted_complex(g[i], tw));
        int top = 0;
        for (int j = 0; j < t.d0[i].source().rank(); ++j) top = std::max(top, t.d0[i](0, j).degree());
        const IdealStrands strands(a[i], top);
        for (int j = 0; j < t.d0[i].source().rank(); ++j) {
            const HomogPoly& p = t.d0[i](0, j);
            if (!p.is_zero() && !strands[p.degree()].contains(p.dense()))
                throw PreconditionError("d_0(F_2) is not contained in a_" + std::to_string(i + 1) + " e_0");
        }
    }
}

void attach_irrelevant(TrimmingData& t) {
    attach_ideals(t, std::vector<Ideal>(t.count(), Ideal::irrelevant()),
                  std::vector<ChainComplex>(t.count(), koszul_complex()));
}

void lift_q1(TrimmingData& t) {
    t.q.assign(t.count(), {});
    for (int i = 0; i < t.count(); ++i) {
        const GradedMap m1 = t.G[i].differential(1);
        auto q1 = lift_through(m1, t.d0[i]);
        if (!q1) throw PreconditionError("no lift q_1: a_" + std::to_string(i + 1) + " does not contain d_0(F_2)");
        if (!(compose(m1, *q1) == t.d0[i])) throw VerificationError("q_1 fails m_1 q_1 = d_0");
        t.q[i].push_back(std::move(*q1));
    }
}

void lift_qk(TrimmingData& t) {
    for (int i = 0; i < t.count(); ++i) {
        for (int k = 2; k + 1 <= t.F.length(); ++k) {
            const GradedMap target = compose(t.q[i][k - 2], t.F.differential(k + 1));
            const GradedMap mk = t.G[i].differential(k);
            auto qk = lift_through(mk, target);
            if (!qk) throw PreconditionError("no lift q_" + std::to_string(k) + " for summand " + std::to_string(i + 1));
            if (!(compose(mk, *qk) == target)) throw VerificationError("q_k fails m_k q_k = q_{k-1} d_{k+1}");
            t.q[i].push_back(std::move(*qk));
        }
    }
}

TrimmingData prepare_trimming(const ChainComplex& f, const std::vector<int>& indices) {
    TrimmingData t = split_summands(f, indices);
    attach_irrelevant(t);
    lift_q1(t);
    lift_qk(t);
    return t;
}

TrimmingData prepare_trimming(const ChainComplex& f, const std::vector<int>& indices,
                              const std::vector<Ideal>& a) {
    TrimmingData t = split_summands(f, indices);
    std::vector<ChainComplex> g;
    for (const auto& ai : a) g.push_back(minimal_free_resolution(ai));
    attach_ideals(t, a, g);
    lift_q1(t);
    lift_qk(t);
    return t;
}

ChainComplex trimming_top(const TrimmingData& t) {
    std::vector<GradedMap> diffs;
    if (t.F.length() >= 2) diffs.push_back(t.d2_prime);
    for (int k = 3; k <= t.F.length(); ++k) diffs.push_back(t.F.differential(k));
    GradedFreeModule f1p;
    for (int i : t.keep) f1p.twists.push_back(t.F.module(1).twists[i]);
    return ChainComplex(f1p, std::move(diffs));
}

ChainComplex trimming_bottom(const TrimmingData& t) {
    int len = 0;
    for (const auto& g : t.G) len = std::max(len, g.length());
    const auto module = [&](int k) {
        if (k == 0) return GradedFreeModule{{0}};
        GradedFreeModule m;
        for (const auto& g : t.G) m = direct_sum(m, g.module(k));
        return m;
    };
    const GradedMap d1 = t.F.differential(1);
    std::vector<GradedMap> diffs;
    for (int k = 1; k <= len; ++k) {
        GradedMap d(module(k), module(k - 1));
        int row = 0, col = 0;
        for (int i = 0; i < t.count(); ++i) {
            const GradedMap mk = t.G[i].differential(k);
            if (k == 1) {
                const HomogPoly& f = d1(0, t.split[i]);
                for (int c = 0; c < mk.source().rank(); ++c) d.set(0, col + c, -(mk(0, c) * f));
            } else {
                d.place(mk, row, col);
                row += mk.target().rank();
            }
            col += mk.source().rank();
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(GradedFreeModule{{0}}, std::move(diffs));
}

ComplexMorphism trimming_morphism(const TrimmingData& t) {
    ComplexMorphism alpha{trimming_top(t), trimming_bottom(t), {}};
    alpha.components.push_back(t.F.differential(1).select_cols(t.keep));
    for (int k = 1; k <= alpha.source.length(); ++k) alpha.components.push_back(t.stacked_q(k));
    return alpha;
}

Ideal trimmed_ideal(const TrimmingData& t) {
    std::vector<HomogPoly> gens;
    const GradedMap d1 = t.F.differential(1);
    for (int i : t.keep) gens.push_back(d1(0, i));
    for (int i = 0; i < t.count(); ++i)
        for (const auto& g : t.a[i].generators()) gens.push_back(g * d1(0, t.split[i]));
    return Ideal(std::move(gens));
}

ChainComplex trimming_complex(const TrimmingData& t) {
    if (t.count() == 0) return t.F;
    ChainComplex cone = mapping_cone(trimming_morphism(t));
    if (!verify_complex(cone)) throw VerificationError("trimming complex fails d^2 = 0");
    const Ideal h0 = image_ideal(cone.differential(1));
    const Ideal j = trimmed_ideal(t);
    const int bound = std::max(h0.max_generator_degree(), j.max_generator_degree());
    if (!ideals_equal(h0, j, bound)) throw VerificationError("trimming complex does not present R/J");
    return cone;
}

BettiTable trimmed_betti(const TrimmingData& t) {
    if (!is_minimal(t.F)) throw PreconditionError("trimmed_betti needs a minimal F");
    for (const auto& g : t.G)
        if (!is_minimal(g)) throw PreconditionError("trimmed_betti needs minimal G^i");

    const ComplexMorphism alpha = trimming_morphism(t);
    const int len = std::max(alpha.source.length() + 1, alpha.target.length());
    std::map<std::pair<int, int>, int> beta;
    for (int i = 0; i <= len; ++i) {
        if (i >= 1)
            for (int tw : alpha.source.module(i - 1).twists) ++beta[{i, tw}];
        for (int tw : alpha.target.module(i).twists) ++beta[{i, tw}];
    }
    // q_i ⊗ k cancels against cone_i and cone_{i+1}; d_1|F_1' has no units.
    for (int i = 1; i < static_cast<int>(alpha.components.size()); ++i)
        for (const auto& [tw, rk] : graded_constant_rank(alpha.components[i])) {
            beta[{i, tw}] -= rk;
            beta[{i + 1, tw}] -= rk;
        }
    BettiTable out;
    for (const auto& [key, v] : beta) {
        if (v < 0) throw VerificationError("negative Betti number from the rank formula");
        if (v > 0) out.add(key.first, key.second, v);
    }
    return out;
}

Ideal trim_ideal(const Ideal& ideal, const std::vector<int>& keep, const std::vector<int>& cut,
                 const std::vector<Ideal>& a) {
    const auto& gens = ideal.generators();
    const int n = static_cast<int>(gens.size());
    std::vector<int> hits(n, 0);
    for (int i : keep) {
        if (i < 0 || i >= n) throw PreconditionError("keep index out of range");
        ++hits[i];
    }
    for (int i : cut) {
        if (i < 0 || i >= n) throw PreconditionError("cut index out of range");
        ++hits[i];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
        throw PreconditionError("keep and cut must partition the generators");
    if (!a.empty() && a.size() != cut.size()) throw PreconditionError("need one ideal per cut generator");

    std::vector<HomogPoly> out;
    for (int i : keep) out.push_back(gens[i]);
    for (std::size_t c = 0; c < cut.size(); ++c) {
        const Ideal& ai = a.empty() ? Ideal::irrelevant() : a[c];
        for (const auto& g : ai.generators()) out.push_back(g * gens[cut[c]]);
    }
    return Ideal(std::move(out));
}

} // namespace trimcx
