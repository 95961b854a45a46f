#include "trimcx/tor_algebra.hpp"

#include "trimcx/errors.hpp"

#include <algorithm>
#include <array>

namespace trimcx {

namespace {

const std::array<std::vector<std::vector<int>>, 4> subsets = {{
    {{}},
    {{0}, {1}, {2}},
    {{0, 1}, {0, 2}, {1, 2}},
    {{0, 1, 2}},
}};

int subset_index(int p, const std::vector<int>& s) {
    const auto& list = subsets[p];
    return static_cast<int>(std::find(list.begin(), list.end(), s) - list.begin());
}

// Sign of the shuffle that sorts s ++ u, or 0 if they overlap.
int wedge_sign(const std::vector<int>& s, const std::vector<int>& u) {
    int inversions = 0;
    for (int a : s)
        for (int b : u) {
            if (a == b) return 0;
            if (a > b) ++inversions;
        }
    return inversions % 2 ? -1 : 1;
}

int top_degree(const Ideal& ideal, int bound) {
    return artinian_vanishing_degree(ideal, bound > 0 ? bound : default_degree_bound(ideal)) - 1;
}

} // namespace

TorAlgebra::TorAlgebra(const Ideal& ideal, int bound)
    : ideal_(ideal), top_(top_degree(ideal, bound)), strands_(ideal, top_ + 1), blocks_(4) {
    for (int p = 1; p <= 3; ++p) {
        int offset = 0;
        for (int j = p; j <= p + top_; ++j) {
            const int n = static_cast<int>(subsets[p].size()) * hilbert_dim(j - p);
            if (n == 0) continue;
            // d_p : C_{p,j} -> C_{p-1,j} and d_{p+1} : C_{p+1,j} -> C_{p,j}
            std::vector<Vector> dcols;
            for (int c = 0; c < n; ++c) {
                Vector e(n);
                e[c] = Scalar(1);
                dcols.push_back(coordinates(boundary(from_coordinates(p, j, e))));
            }
            const int lower = p - 1 >= 0 ? static_cast<int>(subsets[p - 1].size()) * hilbert_dim(j - p + 1) : 0;
            const auto cycles = kernel_basis(Matrix::from_columns(lower, dcols));

            std::vector<Vector> bounds;
            if (p < 3) {
                const int m = static_cast<int>(subsets[p + 1].size()) * hilbert_dim(j - p - 1);
                for (int c = 0; c < m; ++c) {
                    Vector e(m);
                    e[c] = Scalar(1);
                    bounds.push_back(coordinates(boundary(from_coordinates(p + 1, j, e))));
                }
            }
            IncrementalBasis span(n);
            for (const auto& b : bounds) span.insert(b);
            Block blk;
            blk.degree = j;
            blk.offset = offset;
            std::vector<Vector> cols;
            for (const auto& z : cycles)
                if (span.insert(z)) {
                    blk.reps.push_back(from_coordinates(p, j, z));
                    cols.push_back(z);
                }
            if (blk.reps.empty()) continue;
            cols.insert(cols.end(), bounds.begin(), bounds.end());
            blk.lift = Matrix::from_columns(n, cols);
            offset += static_cast<int>(blk.reps.size());
            blocks_[p].push_back(std::move(blk));
        }
    }
}

int TorAlgebra::hilbert_dim(int d) const {
    if (d < 0 || d > top_) return 0;
    return strands_.hilbert(d);
}

int TorAlgebra::dim(int p) const {
    if (p == 0) return 1;
    if (p < 1 || p > 3) return 0;
    int n = 0;
    for (const auto& b : blocks_[p]) n += static_cast<int>(b.reps.size());
    return n;
}

int TorAlgebra::dim(int p, int degree) const {
    if (p == 0) return degree == 0 ? 1 : 0;
    const Block* b = block(p, degree);
    return b ? static_cast<int>(b->reps.size()) : 0;
}

std::vector<int> TorAlgebra::degrees(int p) const {
    std::vector<int> out;
    if (p == 0) return {0};
    if (p < 1 || p > 3) return out;
    for (const auto& b : blocks_[p]) out.insert(out.end(), b.reps.size(), b.degree);
    return out;
}

const KoszulChain& TorAlgebra::representative(int p, int index) const {
    for (const auto& b : blocks_.at(p))
        if (index < b.offset + static_cast<int>(b.reps.size())) return b.reps.at(index - b.offset);
    throw PreconditionError("Tor representative index out of range");
}

const TorAlgebra::Block* TorAlgebra::block(int p, int degree) const {
    if (p < 1 || p > 3) return nullptr;
    for (const auto& b : blocks_[p])
        if (b.degree == degree) return &b;
    return nullptr;
}

KoszulChain TorAlgebra::zero_chain(int p, int degree) const {
    KoszulChain c{p, degree, {}};
    for (std::size_t s = 0; s < subsets[p].size(); ++s) c.coeffs.emplace_back(degree - p);
    return c;
}

Vector TorAlgebra::coordinates(const KoszulChain& c) const {
    Vector out;
    const int d = c.degree - c.p;
    if (d < 0 || d > top_) return out;
    for (const auto& f : c.coeffs) {
        const Vector q = strands_[d].quotient_coordinates(f.dense());
        out.insert(out.end(), q.begin(), q.end());
    }
    return out;
}

KoszulChain TorAlgebra::from_coordinates(int p, int degree, const Vector& v) const {
    KoszulChain c = zero_chain(p, degree);
    const int d = degree - p;
    if (d < 0 || d > top_) return c;
    const auto& std_monos = strands_[d].standard_monomials();
    const int h = static_cast<int>(std_monos.size());
    for (std::size_t s = 0; s < c.coeffs.size(); ++s) {
        std::vector<Scalar> dense(strand_dim(d));
        for (int k = 0; k < h; ++k) dense[std_monos[k]] = v[s * h + k];
        c.coeffs[s] = HomogPoly(d, dense);
    }
    return c;
}

// Reduces every coefficient to its normal form modulo I.
KoszulChain TorAlgebra::normalized(KoszulChain c) const {
    const int d = c.degree - c.p;
    for (auto& f : c.coeffs) {
        if (d < 0 || d > top_) f = HomogPoly(d);
        else f = HomogPoly(d, strands_[d].normal_form(f.dense()));
    }
    return c;
}

KoszulChain TorAlgebra::boundary(const KoszulChain& c) const {
    if (c.p == 0) return zero_chain(0, c.degree);
    KoszulChain out = zero_chain(c.p - 1, c.degree);
    for (std::size_t s = 0; s < c.coeffs.size(); ++s) {
        const auto& set = subsets[c.p][s];
        for (int pos = 0; pos < c.p; ++pos) {
            std::vector<int> rest = set;
            rest.erase(rest.begin() + pos);
            HomogPoly term = c.coeffs[s] * Monomial::variable(set[pos]);
            if (pos % 2) term = -term;
            out.coeffs[subset_index(c.p - 1, rest)] += term;
        }
    }
    return normalized(std::move(out));
}

KoszulChain TorAlgebra::multiply(const KoszulChain& a, const KoszulChain& b) const {
    if (a.p + b.p > 3) return zero_chain(3, a.degree + b.degree);
    KoszulChain out = zero_chain(a.p + b.p, a.degree + b.degree);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            const auto& s = subsets[a.p][i];
            const auto& u = subsets[b.p][j];
            const int sign = wedge_sign(s, u);
            if (sign == 0 || a.coeffs[i].is_zero() || b.coeffs[j].is_zero()) continue;
            std::vector<int> merged = s;
            merged.insert(merged.end(), u.begin(), u.end());
            std::sort(merged.begin(), merged.end());
            HomogPoly term = a.coeffs[i] * b.coeffs[j];
            if (sign < 0) term = -term;
            out.coeffs[subset_index(out.p, merged)] += term;
        }
    return normalized(std::move(out));
}

KoszulChain TorAlgebra::add(const KoszulChain& a, const KoszulChain& b) const {
    if (a.p != b.p || a.degree != b.degree) throw PreconditionError("adding Koszul chains of different degrees");
    KoszulChain out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return normalized(std::move(out));
}

Vector TorAlgebra::homology_class(const KoszulChain& z) const {
    const auto bd = coordinates(boundary(z));
    if (std::any_of(bd.begin(), bd.end(), [](Scalar s) { return !s.is_zero(); }))
        throw PreconditionError("homology_class: chain is not a cycle");
    Vector out(dim(z.p));
    const Block* b = block(z.p, z.degree);
    if (!b) return out;
    const auto sol = solve(b->lift, coordinates(z));
    if (!sol) throw VerificationError("homology_class: cycle outside the computed span");
    for (std::size_t i = 0; i < b->reps.size(); ++i) out[b->offset + i] = (*sol)[i];
    return out;
}

Vector TorAlgebra::product(int p, int i, int q, int j) const {
    return homology_class(multiply(representative(p, i), representative(q, j)));
}

int TorAlgebra::rank_T1T1() const {
    std::vector<Vector> cols;
    for (int a = 0; a < dim(1); ++a)
        for (int b = a + 1; b < dim(1); ++b) cols.push_back(product(1, a, 1, b));
    return rank(Matrix::from_columns(dim(2), cols));
}

int TorAlgebra::dim_T1T2() const {
    std::vector<Vector> cols;
    for (int a = 0; a < dim(1); ++a)
        for (int b = 0; b < dim(2); ++b) cols.push_back(product(1, a, 2, b));
    return rank(Matrix::from_columns(dim(3), cols));
}

int TorAlgebra::delta_rank() const {
    const int n1 = dim(1), n3 = dim(3);
    std::vector<Vector> cols;
    for (int f = 0; f < dim(2); ++f) {
        Vector col;
        col.reserve(std::size_t(n1) * n3);
        for (int e = 0; e < n1; ++e) {
            const Vector v = product(1, e, 2, f);
            col.insert(col.end(), v.begin(), v.end());
        }
        cols.push_back(std::move(col));
    }
    return rank(Matrix::from_columns(n1 * n3, cols));
}

TorAlgebra koszul_tor(const Ideal& ideal, int bound) { return TorAlgebra(ideal, bound); }

int delta_rank(const TorAlgebra& t) { return t.delta_rank(); }

std::string ClassReport::verdict_string() const {
    if (verdict == TorVerdict::G) return "G(" + std::to_string(delta_rank) + ")";
    return "not-G (" + reason + ")";
}

ClassReport classify_G(const TorAlgebra& t, const ArtinianProfile& profile) {
    ClassReport r;
    r.t1 = t.dim(1);
    r.t2 = t.dim(2);
    r.t3 = t.dim(3);
    r.mu = r.t1;
    r.type = r.t3;
    if (profile.shape) {
        r.ell = profile.shape->ell;
        r.s = profile.shape->s;
    }
    r.rank_T1T1 = t.rank_T1T1();
    r.dim_T1T2 = t.dim_T1T2();
    r.rank_T1T2 = r.dim_T1T2;
    r.delta_rank = t.delta_rank();
    if (r.rank_T1T1 != 0) r.reason = "T1*T1 != 0";
    else if (r.dim_T1T2 != 1) r.reason = "dim T1*T2 = " + std::to_string(r.dim_T1T2);
    else if (r.delta_rank < 2) r.reason = "delta rank " + std::to_string(r.delta_rank) + " < 2";
    else r.verdict = TorVerdict::G;
    return r;
}

ClassReport classify_G(const Ideal& ideal, const ArtinianProfile& profile, int bound) {
    return classify_G(TorAlgebra(ideal, bound), profile);
}

ClassReport classify_G(const Ideal& ideal, int bound) {
    return classify_G(ideal, artinian_profile(ideal, bound), bound);
}

bool TorBoundsReport::bounds_ok() const {
    if (!lower_bound_holds) return false;
    return !hypothesis || (equality_holds && verdict_holds);
}

bool TorBoundsReport::graded_ok() const {
    return t1_s == t1_s_expected && t2_s1 == t2_s1_expected && t2_s2 == t2_s2_expected;
}

TorBoundsReport check_bounds(const Ideal& ideal, const Ideal& gorenstein, const ArtinianProfile& profile) {
    if (!profile.shape || profile.shape->ell < 1)
        throw PreconditionError("check_bounds: socle is not k(-s)^l + k(-2s+1) with l >= 1");
    TorBoundsReport out;
    out.s = profile.shape->s;
    out.ell = profile.shape->ell;
    const int s = out.s, l = out.ell;
    out.b = mu(gorenstein) - (s + 1);
    const TorAlgebra t(ideal, 2 * s);
    out.report = classify_G(t, profile);
    out.mu = out.report.mu;
    out.delta_rank = out.report.delta_rank;
    out.lower_bound = out.mu - 3 * l;
    out.lower_bound_holds = out.delta_rank >= out.lower_bound;
    out.hypothesis = l <= s + out.b - 1 - std::min(l * out.b, 3);
    out.equality_holds = out.delta_rank == out.lower_bound;
    out.verdict_holds = out.report.verdict == TorVerdict::G && out.report.delta_rank == out.lower_bound;

    out.t1_s = t.dim(1, s);
    out.t1_s_expected = s + 1 - l;
    out.t2_s1 = t.dim(2, s + 1);
    out.t2_s1_expected = out.mu - s - 1 - 2 * l;
    out.t2_s2 = t.dim(2, s + 2);
    out.t2_s2_expected = s + 4 * l;
    out.t2_s2_euler = s + 1 + 3 * l;
    return out;
}

} // namespace trimcx
