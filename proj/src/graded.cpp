#include "trimcx/graded.hpp"

#include "trimcx/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace trimcx {

// ---------------------------------------------------------------- modules

int GradedFreeModule::strand_dim(int d) const {
    int n = 0;
    for (int t : twists) n += trimcx::strand_dim(d - t);
    return n;
}

std::vector<int> GradedFreeModule::strand_offsets(int d) const {
    std::vector<int> off(twists.size() + 1, 0);
    for (std::size_t i = 0; i < twists.size(); ++i) off[i + 1] = off[i] + trimcx::strand_dim(d - twists[i]);
    return off;
}

std::vector<StrandIndex> GradedFreeModule::strand_basis(int d) const {
    std::vector<StrandIndex> out;
    for (int i = 0; i < rank(); ++i)
        for (Monomial m : trimcx::strand_basis(d - twists[i])) out.push_back({i, m});
    return out;
}

GradedFreeModule GradedFreeModule::shifted(int s) const {
    GradedFreeModule m = *this;
    for (int& t : m.twists) t += s;
    return m;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
    GradedFreeModule m = a;
    m.twists.insert(m.twists.end(), b.twists.begin(), b.twists.end());
    return m;
}

Vector strand_coordinates(const GradedFreeModule& m, int d, const ModuleElement& e) {
    if (static_cast<int>(e.size()) != m.rank()) throw PreconditionError("module element has wrong rank");
    const auto off = m.strand_offsets(d);
    Vector v(off.back());
    for (int i = 0; i < m.rank(); ++i) {
        if (e[i].is_zero()) continue;
        if (e[i].degree() != d - m.twists[i]) throw PreconditionError("module element is not homogeneous");
        for (const auto& t : e[i].terms()) v[off[i] + monomial_index(t.mono)] = t.coeff;
    }
    return v;
}

ModuleElement element_from_strand(const GradedFreeModule& m, int d, const Vector& v) {
    const auto off = m.strand_offsets(d);
    if (static_cast<int>(v.size()) != off.back()) throw PreconditionError("strand vector has wrong length");
    ModuleElement e;
    e.reserve(m.rank());
    for (int i = 0; i < m.rank(); ++i) {
        const int deg = d - m.twists[i];
        if (deg < 0) {
            e.emplace_back(deg);
            continue;
        }
        Vector part(v.begin() + off[i], v.begin() + off[i + 1]);
        e.emplace_back(deg, part);
    }
    return e;
}

// ---------------------------------------------------------------- maps

GradedMap::GradedMap(GradedFreeModule source, GradedFreeModule target)
    : source_(std::move(source)), target_(std::move(target)) {
    entries_.reserve(std::size_t(source_.rank()) * target_.rank());
    for (int i = 0; i < target_.rank(); ++i)
        for (int j = 0; j < source_.rank(); ++j) entries_.emplace_back(forced_degree(i, j));
}

void GradedMap::set(int i, int j, const HomogPoly& f) {
    const int deg = forced_degree(i, j);
    if (f.is_zero()) {
        entries_[index(i, j)] = HomogPoly(deg);
        return;
    }
    if (f.degree() != deg)
        throw PreconditionError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                                std::to_string(f.degree()) + ", expected " + std::to_string(deg));
    entries_[index(i, j)] = f;
}

ModuleElement GradedMap::column(int j) const {
    ModuleElement e;
    for (int i = 0; i < target_.rank(); ++i) e.push_back((*this)(i, j));
    return e;
}

ModuleElement GradedMap::apply(const ModuleElement& e, int degree) const {
    if (static_cast<int>(e.size()) != source_.rank()) throw PreconditionError("apply: wrong element rank");
    ModuleElement out;
    for (int i = 0; i < target_.rank(); ++i) {
        HomogPoly acc(degree - target_.twists[i]);
        for (int j = 0; j < source_.rank(); ++j) {
            const HomogPoly& f = (*this)(i, j);
            if (f.is_zero() || e[j].is_zero()) continue;
            acc += f * e[j];
        }
        out.push_back(acc.with_degree(degree - target_.twists[i]));
    }
    return out;
}

Matrix GradedMap::strand_matrix(int d) const {
    const auto row_off = target_.strand_offsets(d);
    const auto col_off = source_.strand_offsets(d);
    Matrix m(row_off.back(), col_off.back());
    for (int j = 0; j < source_.rank(); ++j) {
        const int src_deg = d - source_.twists[j];
        if (src_deg < 0) continue;
        const auto monos = trimcx::strand_basis(src_deg);
        for (int i = 0; i < target_.rank(); ++i) {
            const HomogPoly& f = (*this)(i, j);
            if (f.is_zero()) continue;
            for (std::size_t mi = 0; mi < monos.size(); ++mi) {
                const int col = col_off[j] + static_cast<int>(mi);
                for (const auto& t : f.terms())
                    m(row_off[i] + monomial_index(t.mono * monos[mi]), col) += t.coeff;
            }
        }
    }
    return m;
}

StrandMatrix GradedMap::strand(int d) const {
    return {strand_matrix(d), target_.strand_basis(d), source_.strand_basis(d)};
}

Matrix GradedMap::constant_part() const {
    Matrix m(target_.rank(), source_.rank());
    for (int i = 0; i < target_.rank(); ++i)
        for (int j = 0; j < source_.rank(); ++j) m(i, j) = (*this)(i, j).constant_value();
    return m;
}

bool GradedMap::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const HomogPoly& f) { return f.is_zero(); });
}

bool GradedMap::has_unit_entry() const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [](const HomogPoly& f) { return !f.is_zero() && f.degree() == 0; });
}

GradedMap GradedMap::operator-() const {
    GradedMap g = *this;
    for (auto& f : g.entries_) f *= Scalar(-1);
    return g;
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
    if (!(f.source_ == g.source_) || !(f.target_ == g.target_))
        throw PreconditionError("adding maps between different modules");
    GradedMap h = f;
    for (std::size_t k = 0; k < h.entries_.size(); ++k)
        h.entries_[k] = (h.entries_[k] + g.entries_[k]).with_degree(g.entries_[k].degree());
    return h;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (!(f.source_ == g.target_)) throw PreconditionError("composing maps with mismatched modules");
    GradedMap h(g.source_, f.target_);
    for (int i = 0; i < f.target_.rank(); ++i)
        for (int j = 0; j < g.source_.rank(); ++j) {
            HomogPoly acc(h.forced_degree(i, j));
            for (int k = 0; k < f.source_.rank(); ++k) {
                const HomogPoly& a = f(i, k);
                const HomogPoly& b = g(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc += a * b;
            }
            h.set(i, j, acc);
        }
    return h;
}

bool operator==(const GradedMap& f, const GradedMap& g) {
    return f.source_ == g.source_ && f.target_ == g.target_ && f.entries_ == g.entries_;
}

void GradedMap::place(const GradedMap& block, int row_offset, int col_offset, Scalar sign) {
    for (int i = 0; i < block.target_.rank(); ++i)
        for (int j = 0; j < block.source_.rank(); ++j) {
            const HomogPoly& f = block(i, j);
            if (f.is_zero()) continue;
            set(row_offset + i, col_offset + j, f * sign);
        }
}

GradedMap GradedMap::select_rows(const std::vector<int>& rows) const {
    GradedFreeModule tgt;
    for (int r : rows) tgt.twists.push_back(target_.twists.at(r));
    GradedMap g(source_, tgt);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < source_.rank(); ++j) g.set(static_cast<int>(i), j, (*this)(rows[i], j));
    return g;
}

GradedMap GradedMap::select_cols(const std::vector<int>& cols) const {
    GradedFreeModule src;
    for (int c : cols) src.twists.push_back(source_.twists.at(c));
    GradedMap g(src, target_);
    for (int i = 0; i < target_.rank(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) g.set(i, static_cast<int>(j), (*this)(i, cols[j]));
    return g;
}

// ---------------------------------------------------------------- complexes

ChainComplex::ChainComplex(GradedFreeModule f0, std::vector<GradedMap> differentials)
    : f0_(std::move(f0)), differentials_(std::move(differentials)) {
    for (std::size_t k = 0; k < differentials_.size(); ++k) {
        const GradedFreeModule& expected = k == 0 ? f0_ : differentials_[k - 1].source();
        if (!(differentials_[k].target() == expected))
            throw PreconditionError("dimension mismatch: d_" + std::to_string(k + 1) +
                                    " does not land in F_" + std::to_string(k));
    }
}

GradedFreeModule ChainComplex::module(int k) const {
    if (k == 0) return f0_;
    if (k < 0 || k > length()) return {};
    return differentials_[k - 1].source();
}

GradedMap ChainComplex::differential(int k) const {
    if (k >= 1 && k <= length()) return differentials_[k - 1];
    return GradedMap(module(k), module(k - 1));
}

std::vector<int> ChainComplex::ranks() const {
    std::vector<int> r;
    for (int k = 0; k <= length(); ++k) r.push_back(module(k).rank());
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

bool verify_complex(const ChainComplex& c) {
    for (int k = 1; k < c.length(); ++k)
        if (!compose(c.differential(k), c.differential(k + 1)).is_zero()) return false;
    return true;
}

bool is_strand_exact(const ChainComplex& c, int max_degree) {
    for (int j = 0; j <= max_degree; ++j) {
        std::vector<int> ranks(c.length() + 2, 0);
        for (int k = 1; k <= c.length(); ++k) ranks[k] = rank(c.differential(k).strand_matrix(j));
        for (int k = 1; k <= c.length(); ++k)
            if (ranks[k] + ranks[k + 1] != c.module(k).strand_dim(j)) return false;
    }
    return true;
}

bool commutes(const ComplexMorphism& alpha) {
    const auto comp = [&](int k) {
        if (k < static_cast<int>(alpha.components.size())) return alpha.components[k];
        return GradedMap(alpha.source.module(k), alpha.target.module(k));
    };
    const int n = std::max(alpha.source.length(), alpha.target.length());
    for (int k = 1; k <= n; ++k) {
        const GradedMap lhs = compose(comp(k - 1), alpha.source.differential(k));
        const GradedMap rhs = compose(alpha.target.differential(k), comp(k));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

ChainComplex mapping_cone(const ComplexMorphism& alpha) {
    if (!commutes(alpha)) throw PreconditionError("mapping_cone: morphism does not commute with differentials");
    const ChainComplex& s = alpha.source;
    const ChainComplex& t = alpha.target;
    const auto comp = [&](int k) {
        if (k >= 0 && k < static_cast<int>(alpha.components.size())) return alpha.components[k];
        return GradedMap(s.module(k), t.module(k));
    };
    const int len = std::max(s.length() + 1, t.length());
    const auto cone_module = [&](int k) { return direct_sum(s.module(k - 1), t.module(k)); };

    std::vector<GradedMap> diffs;
    for (int k = 1; k <= len; ++k) {
        GradedMap d(cone_module(k), cone_module(k - 1));
        const int s_rows = s.module(k - 2).rank();
        const int s_cols = s.module(k - 1).rank();
        if (k >= 2) d.place(s.differential(k - 1), 0, 0, Scalar(-1));
        d.place(comp(k - 1), s_rows, 0);
        d.place(t.differential(k), s_rows, s_cols);
        diffs.push_back(std::move(d));
    }
    ChainComplex cone(cone_module(0), std::move(diffs));
    if (!verify_complex(cone)) throw VerificationError("mapping cone failed d^2 = 0");
    return cone;
}

namespace {

struct MutableComplex {
    std::vector<std::vector<int>> twists;                  // F_0..F_n
    std::vector<std::vector<std::vector<HomogPoly>>> maps; // maps[k] = d_k as rows x cols, k >= 1

    explicit MutableComplex(const ChainComplex& c) : twists(c.length() + 1), maps(c.length() + 1) {
        for (int k = 0; k <= c.length(); ++k) twists[k] = c.module(k).twists;
        for (int k = 1; k <= c.length(); ++k) {
            const GradedMap d = c.differential(k);
            maps[k].assign(d.target().rank(), {});
            for (int i = 0; i < d.target().rank(); ++i)
                for (int j = 0; j < d.source().rank(); ++j) maps[k][i].push_back(d(i, j));
        }
    }

    int n() const { return static_cast<int>(twists.size()) - 1; }

    bool find_unit(int& k, int& r, int& c) const {
        for (k = 1; k <= n(); ++k)
            for (r = 0; r < static_cast<int>(maps[k].size()); ++r)
                for (c = 0; c < static_cast<int>(maps[k][r].size()); ++c) {
                    const HomogPoly& f = maps[k][r][c];
                    if (!f.is_zero() && f.degree() == 0) return true;
                }
        return false;
    }

    void cancel(int k, int r, int c) {
        auto& d = maps[k];
        const Scalar uinv = d[r][c].constant_value().inverse();
        for (int i = 0; i < static_cast<int>(d.size()); ++i) {
            if (i == r || d[i][c].is_zero()) continue;
            const HomogPoly factor = d[i][c] * uinv;
            for (int j = 0; j < static_cast<int>(d[i].size()); ++j) {
                if (j == c || d[r][j].is_zero()) continue;
                d[i][j] -= factor * d[r][j];
            }
        }
        d.erase(d.begin() + r);
        for (auto& row : d) row.erase(row.begin() + c);
        if (k - 1 >= 1)
            for (auto& row : maps[k - 1]) row.erase(row.begin() + r);
        if (k + 1 <= n()) maps[k + 1].erase(maps[k + 1].begin() + c);
        twists[k - 1].erase(twists[k - 1].begin() + r);
        twists[k].erase(twists[k].begin() + c);
    }

    ChainComplex freeze() const {
        std::vector<GradedMap> diffs;
        for (int k = 1; k <= n(); ++k) {
            GradedMap d(GradedFreeModule{twists[k]}, GradedFreeModule{twists[k - 1]});
            for (int i = 0; i < static_cast<int>(maps[k].size()); ++i)
                for (int j = 0; j < static_cast<int>(maps[k][i].size()); ++j) d.set(i, j, maps[k][i][j]);
            diffs.push_back(std::move(d));
        }
        return ChainComplex(GradedFreeModule{twists[0]}, std::move(diffs));
    }
};

} // namespace

ChainComplex minimalize(const ChainComplex& c) {
    MutableComplex w(c);
    int k = 0, r = 0, col = 0;
    while (w.find_unit(k, r, col)) w.cancel(k, r, col);
    return w.freeze();
}

// ---------------------------------------------------------------- Betti tables

int BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, int count) {
    if (count == 0) return;
    int& v = entries_[{i, j}];
    v += count;
    if (v == 0) entries_.erase({i, j});
}

std::vector<int> BettiTable::totals() const {
    std::vector<int> t;
    for (const auto& [key, v] : entries_) {
        if (static_cast<int>(t.size()) <= key.first) t.resize(key.first + 1, 0);
        t[key.first] += v;
    }
    return t;
}

std::string BettiTable::render() const {
    const auto tot = totals();
    const int cols = std::max<int>(4, static_cast<int>(tot.size()));
    std::map<int, std::vector<int>> rows;
    for (const auto& [key, v] : entries_) {
        auto& row = rows[key.second - key.first];
        row.resize(cols, 0);
        row[key.first] = v;
    }
    int width = 3;
    for (int v : tot) width = std::max(width, static_cast<int>(std::to_string(v).size()) + 1);
    int label = 6;
    for (const auto& [r, row] : rows) label = std::max(label, static_cast<int>(std::to_string(r).size()) + 2);

    std::ostringstream os;
    os << std::setw(label) << "";
    for (int i = 0; i < cols; ++i) os << std::setw(width) << i;
    os << '\n' << std::setw(label) << "total:";
    for (int i = 0; i < cols; ++i) os << std::setw(width) << (i < static_cast<int>(tot.size()) ? tot[i] : 0);
    os << '\n';
    for (const auto& [r, row] : rows) {
        os << std::setw(label) << (std::to_string(r) + ":");
        for (int v : row) {
            if (v == 0)
                os << std::setw(width) << '.';
            else
                os << std::setw(width) << v;
        }
        os << '\n';
    }
    return os.str();
}

std::string BettiTable::render_kv() const {
    std::ostringstream os;
    for (const auto& [key, v] : entries_) os << "beta " << key.first << ' ' << key.second << ' ' << v << '\n';
    return os.str();
}

BettiTable betti_table(const ChainComplex& c, bool minimal) {
    const ChainComplex m = minimal ? c : minimalize(c);
    BettiTable b;
    for (int k = 0; k <= m.length(); ++k)
        for (int t : m.module(k).twists) b.add(k, t);
    return b;
}

ChainComplex koszul_complex() {
    std::vector<std::vector<std::vector<int>>> subsets(4);
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> s;
        for (int v = 0; v < 3; ++v)
            if (mask & (1 << v)) s.push_back(v);
        subsets[s.size()].push_back(s);
    }
    for (auto& level : subsets) std::sort(level.begin(), level.end());

    std::vector<GradedMap> diffs;
    for (int k = 1; k <= 3; ++k) {
        GradedMap d(GradedFreeModule{std::vector<int>(subsets[k].size(), k)},
                    GradedFreeModule{std::vector<int>(subsets[k - 1].size(), k - 1)});
        for (std::size_t j = 0; j < subsets[k].size(); ++j) {
            const auto& s = subsets[k][j];
            for (std::size_t p = 0; p < s.size(); ++p) {
                auto face = s;
                face.erase(face.begin() + p);
                const auto it = std::find(subsets[k - 1].begin(), subsets[k - 1].end(), face);
                const int i = static_cast<int>(it - subsets[k - 1].begin());
                d.set(i, static_cast<int>(j), HomogPoly::variable(s[p]) * Scalar(p % 2 == 0 ? 1 : -1));
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(GradedFreeModule{{0}}, std::move(diffs));
}

} // namespace trimcx
