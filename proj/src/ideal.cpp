#include "trimcx/ideal.hpp"

#include "trimcx/errors.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace trimcx {

Ideal::Ideal(std::vector<HomogPoly> generators) : gens_(std::move(generators)) {}

int Ideal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_)
        if (!g.is_zero()) d = std::max(d, g.degree());
    return d;
}

int Ideal::min_generator_degree() const {
    int d = -1;
    for (const auto& g : gens_)
        if (!g.is_zero() && (d < 0 || g.degree() < d)) d = g.degree();
    return d;
}

Ideal Ideal::irrelevant() {
    return Ideal({HomogPoly::variable(0), HomogPoly::variable(1), HomogPoly::variable(2)});
}

StrandMatrix strand_multiplication_matrix(const std::vector<HomogPoly>& gens, int d) {
    GradedFreeModule source;
    for (const auto& g : gens) source.twists.push_back(g.degree());
    GradedMap row(source, GradedFreeModule{{0}});
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) row.set(0, j, gens[j]);
    return row.strand(d);
}

int shift_index(int index, int var) {
    int e = 0;
    while ((e + 1) * (e + 2) / 2 <= index) ++e;
    const int c = index - e * (e + 1) / 2;
    switch (var) {
    case 0: return index;
    case 1: return (e + 1) * (e + 2) / 2 + c;
    default: return (e + 1) * (e + 2) / 2 + c + 1;
    }
}

std::vector<Vector> multiply_by_linear_forms(int d, const std::vector<Vector>& vs) {
    std::vector<Vector> out;
    if (vs.empty()) return out;
    const int n = strand_dim(d);
    std::vector<std::array<int, 3>> shifts(n);
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < 3; ++v) shifts[i][v] = shift_index(i, v);
    out.reserve(3 * vs.size());
    for (int v = 0; v < 3; ++v)
        for (const auto& vec : vs) {
            Vector w(strand_dim(d + 1));
            for (int i = 0; i < n; ++i)
                if (!vec[i].is_zero()) w[shifts[i][v]] = vec[i];
            out.push_back(std::move(w));
        }
    return out;
}

// ---------------------------------------------------------------- StrandSpace

StrandSpace::StrandSpace(int degree, const std::vector<Vector>& spanning) : degree_(degree) {
    const int n = strand_dim(degree);
    if (!spanning.empty()) {
        Matrix m(static_cast<int>(spanning.size()), n);
        for (int r = 0; r < m.rows(); ++r) {
            if (static_cast<int>(spanning[r].size()) != n) throw PreconditionError("StrandSpace: wrong vector length");
            for (int c = 0; c < n; ++c) m(r, c) = spanning[r][c];
        }
        pivots_ = kernels::rref(m);
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            auto row = m.row(static_cast<int>(r));
            basis_.emplace_back(row.begin(), row.end());
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int i = 0; i < n; ++i)
        if (!is_pivot[i]) standard_.push_back(i);
}

Vector StrandSpace::normal_form(Vector v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Scalar f = v[pivots_[r]];
        if (f.is_zero()) continue;
        const Vector& row = basis_[r];
        for (std::size_t j = pivots_[r]; j < row.size(); ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

bool StrandSpace::contains(const Vector& v) const {
    const Vector w = normal_form(v);
    return std::all_of(w.begin(), w.end(), [](Scalar s) { return s.is_zero(); });
}

Vector StrandSpace::quotient_coordinates(const Vector& v) const {
    const Vector w = normal_form(v);
    Vector q;
    q.reserve(standard_.size());
    for (int i : standard_) q.push_back(w[i]);
    return q;
}

// ---------------------------------------------------------------- IdealStrands

IdealStrands::IdealStrands(const Ideal& ideal, int max_degree) {
    std::map<int, std::vector<Vector>> by_degree;
    for (const auto& g : ideal.generators())
        if (!g.is_zero()) by_degree[g.degree()].push_back(g.dense());
    for (int d = 0; d <= max_degree; ++d) {
        if (d > 0 && strands_.back().dim() == strands_.back().ambient_dim()) {
            std::vector<Vector> full;
            for (int i = 0; i < strand_dim(d); ++i) {
                Vector e(strand_dim(d));
                e[i] = Scalar(1);
                full.push_back(std::move(e));
            }
            strands_.emplace_back(d, full);
            continue;
        }
        std::vector<Vector> span = d > 0 ? multiply_by_linear_forms(d - 1, strands_.back().basis()) : std::vector<Vector>{};
        if (auto it = by_degree.find(d); it != by_degree.end())
            span.insert(span.end(), it->second.begin(), it->second.end());
        strands_.emplace_back(d, span);
    }
}

std::vector<int> IdealStrands::hilbert_function() const {
    std::vector<int> h;
    for (int d = 0; d <= max_degree(); ++d) h.push_back(hilbert(d));
    return h;
}

int IdealStrands::vanishing_degree() const {
    for (int d = 0; d <= max_degree(); ++d)
        if (hilbert(d) == 0) return d;
    return -1;
}

// ---------------------------------------------------------------- generators

std::vector<HomogPoly> minimal_generators(const Ideal& ideal) {
    const int top = ideal.max_generator_degree();
    const IdealStrands strands(ideal, std::max(0, top - 1));
    std::map<int, IncrementalBasis> spans;
    std::vector<HomogPoly> out;
    for (const auto& g : ideal.generators()) {
        if (g.is_zero()) continue;
        const int d = g.degree();
        auto it = spans.find(d);
        if (it == spans.end()) {
            IncrementalBasis b(strand_dim(d));
            if (d > 0)
                for (const auto& v : multiply_by_linear_forms(d - 1, strands[d - 1].basis())) b.insert(v);
            it = spans.emplace(d, std::move(b)).first;
        }
        if (it->second.insert(g.dense())) out.push_back(g);
    }
    return out;
}

int mu(const Ideal& ideal) { return static_cast<int>(minimal_generators(ideal).size()); }

int default_degree_bound(const Ideal& ideal) { return std::max(4, 4 * ideal.max_generator_degree()); }

int artinian_vanishing_degree(const Ideal& ideal, int bound) {
    const IdealStrands strands(ideal, bound);
    const int v = strands.vanishing_degree();
    if (v < 0)
        throw NotArtinianError("R/I does not vanish through degree " + std::to_string(bound) +
                               " (not Artinian, or raise --bound)");
    return v;
}

bool ideals_equal(const Ideal& i, const Ideal& j, int max_degree) {
    const IdealStrands a(i, max_degree);
    const IdealStrands b(j, max_degree);
    for (int d = 0; d <= max_degree; ++d)
        if (!(a[d] == b[d])) return false;
    return true;
}

} // namespace trimcx
