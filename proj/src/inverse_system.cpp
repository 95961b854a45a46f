#include "trimcx/inverse_system.hpp"

#include "trimcx/errors.hpp"

#include <algorithm>
#include <random>

namespace trimcx {

namespace {

Matrix rows_to_matrix(const std::vector<Vector>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
}

// x_var contracted into a dense dual vector of degree d+1, landing in degree d.
Vector contract_by_variable(int d, const Vector& v, int var) {
    Vector w(strand_dim(d));
    for (int i = 0; i < strand_dim(d); ++i) w[i] = v[shift_index(i, var)];
    return w;
}

long long binom(int n, int k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int resolve_bound(const Ideal& ideal, int bound) {
    return bound > 0 ? bound : default_degree_bound(ideal);
}

HomogPoly random_dense(int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> coeff(1, Scalar::characteristic() - 1);
    std::vector<Scalar> dense(strand_dim(degree));
    for (auto& c : dense) c = Scalar::from_rep(static_cast<Scalar::rep>(coeff(rng)));
    return HomogPoly(degree, dense);
}

} // namespace

DualPoly contract(const HomogPoly& f, const DualPoly& phi) {
    if (f.degree() > phi.degree()) throw PreconditionError("contract: degree of f exceeds degree of phi");
    const int d = phi.degree() - f.degree();
    std::vector<Scalar> out(strand_dim(d));
    for (const auto& u : f.terms())
        for (const auto& t : phi.poly().terms())
            if (u.mono.divides(t.mono)) out[monomial_index(u.mono.quotient_of(t.mono))] += u.coeff * t.coeff;
    return DualPoly(HomogPoly(d, out));
}

InverseSystem::InverseSystem(std::vector<DualPoly> generators) : gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.is_zero()) throw PreconditionError("inverse system generators must be nonzero");
}

std::vector<int> InverseSystem::degrees() const {
    std::vector<int> d;
    for (const auto& g : gens_) d.push_back(g.degree());
    return d;
}

int InverseSystem::max_degree() const {
    int m = -1;
    for (const auto& g : gens_) m = std::max(m, g.degree());
    return m;
}

StrandMatrix phi_matrix(const InverseSystem& n, int i) {
    StrandMatrix out;
    const auto domain = strand_basis(i);
    for (const auto& m : domain) out.rows.push_back({0, m});
    const auto& gens = n.generators();
    std::vector<int> offsets;
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
        offsets.push_back(static_cast<int>(out.cols.size()));
        if (gens[j].degree() < i) continue;
        for (const auto& m : strand_basis(gens[j].degree() - i)) out.cols.push_back({j, m});
    }
    out.values = Matrix(static_cast<int>(out.rows.size()), static_cast<int>(out.cols.size()));
    for (int r = 0; r < static_cast<int>(domain.size()); ++r)
        for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
            if (gens[j].degree() < i) continue;
            for (const auto& t : gens[j].poly().terms())
                if (domain[r].divides(t.mono))
                    out.values(r, offsets[j] + monomial_index(domain[r].quotient_of(t.mono))) = t.coeff;
        }
    return out;
}

int tipping_point(const InverseSystem& n) {
    for (int i = 0;; ++i) {
        const auto phi = phi_matrix(n, i);
        if (rank(phi.values) == phi.values.cols()) return i;
    }
}

Ideal annihilator(const InverseSystem& n, int bound) {
    if (bound <= n.max_degree())
        throw PreconditionError("annihilator: bound must exceed the largest generator degree");
    std::vector<HomogPoly> gens;
    std::vector<Vector> previous;
    for (int d = 0; d <= bound; ++d) {
        const auto kernel = kernel_basis(phi_matrix(n, d).values.transpose());
        IncrementalBasis span(strand_dim(d));
        for (const auto& v : multiply_by_linear_forms(d - 1, previous)) span.insert(v);
        for (const auto& v : kernel)
            if (span.insert(v)) gens.emplace_back(d, v);
        previous = kernel;
    }
    return Ideal(std::move(gens));
}

InverseSystem inverse_system(const Ideal& ideal, int bound) {
    const int top = artinian_vanishing_degree(ideal, bound) - 1;
    const IdealStrands strands(ideal, top);
    std::vector<std::vector<Vector>> perp(top + 2);
    for (int d = 0; d <= top; ++d)
        perp[d] = kernel_basis(rows_to_matrix(strands[d].basis(), strand_dim(d)));

    std::vector<DualPoly> gens;
    for (int d = top; d >= 0; --d) {
        IncrementalBasis span(strand_dim(d));
        for (const auto& v : perp[d + 1])
            for (int var = 0; var < 3; ++var) span.insert(contract_by_variable(d, v, var));
        for (const auto& v : perp[d])
            if (span.insert(v)) gens.emplace_back(HomogPoly(d, v));
    }
    return InverseSystem(std::move(gens));
}

int SocleInfo::type() const {
    int t = 0;
    for (int c : dims) t += c;
    return t;
}

SocleInfo socle(const Ideal& ideal, int bound) {
    const int top = artinian_vanishing_degree(ideal, resolve_bound(ideal, bound)) - 1;
    const IdealStrands strands(ideal, top + 1);
    SocleInfo out;
    for (int d = 0; d <= top; ++d) {
        const auto& next = strands[d + 1];
        const int q = static_cast<int>(next.standard_monomials().size());
        Matrix a(3 * q, strand_dim(d));
        for (int i = 0; i < strand_dim(d); ++i)
            for (int var = 0; var < 3; ++var) {
                Vector e(strand_dim(d + 1));
                e[shift_index(i, var)] = Scalar(1);
                const Vector qc = next.quotient_coordinates(e);
                for (int r = 0; r < q; ++r) a(var * q + r, i) = qc[r];
            }
        IncrementalBasis span(strand_dim(d));
        for (const auto& v : strands[d].basis()) span.insert(v);
        std::vector<HomogPoly> reps;
        for (const auto& v : kernel_basis(a))
            if (span.insert(v)) reps.emplace_back(d, v);
        out.dims.push_back(static_cast<int>(reps.size()));
        out.representatives.push_back(std::move(reps));
    }
    return out;
}

CompressedCheck is_compressed(const Ideal& ideal, int bound) {
    const int b = resolve_bound(ideal, bound);
    const SocleInfo soc = socle(ideal, b);
    const int s = static_cast<int>(soc.dims.size()) - 1;
    const IdealStrands strands(ideal, s);
    CompressedCheck out;
    out.hilbert = strands.hilbert_function();
    const int e = s >= 1 ? out.hilbert[1] : 0;
    out.compressed = true;
    for (int i = 0; i <= s; ++i) {
        long long from_socle = 0;
        for (int l = i; l <= s; ++l) from_socle += soc.dims[l] * binom(e - 1 + l - i, l - i);
        const int maximum = static_cast<int>(std::min(binom(e - 1 + i, i), from_socle));
        out.maximum.push_back(maximum);
        if (out.compressed && out.hilbert[i] != maximum) {
            out.compressed = false;
            out.witness_degree = i;
        }
    }
    return out;
}

std::optional<SocleShape> socle_shape(const std::vector<int>& c) {
    int top = static_cast<int>(c.size()) - 1;
    while (top >= 0 && c[top] == 0) --top;
    if (top < 1 || top % 2 == 0 || c[top] != 1) return std::nullopt;
    SocleShape shape{(top + 1) / 2, 0};
    for (int d = 0; d < top; ++d) {
        if (c[d] == 0) continue;
        if (d != shape.s) return std::nullopt;
        shape.ell = c[d];
    }
    return shape;
}

ArtinianProfile artinian_profile(const Ideal& ideal, int bound) {
    const int b = resolve_bound(ideal, bound);
    ArtinianProfile p;
    const SocleInfo soc = socle(ideal, b);
    p.socle_polynomial = soc.dims;
    p.top_socle_degree = static_cast<int>(soc.dims.size()) - 1;
    p.type = soc.type();
    const CompressedCheck cc = is_compressed(ideal, b);
    p.hilbert = cc.hilbert;
    p.compressed = cc.compressed;
    p.compressed_witness = cc.witness_degree;
    p.embedding_dimension = p.hilbert.size() > 1 ? p.hilbert[1] : 0;
    p.tipping_point = tipping_point(inverse_system(ideal, b));
    p.shape = socle_shape(p.socle_polynomial);
    return p;
}

DualPoly random_dual(int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return DualPoly(random_dense(degree, rng));
}

RandomInstance random_instance(int s, int ell, std::uint64_t seed, int max_attempts) {
    if (s < 3) throw PreconditionError("random_instance: need s >= 3");
    if (ell < 1 || ell > s + 1) throw PreconditionError("random_instance: need 1 <= ell <= s+1");
    require_characteristic_above(4 * s);

    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<DualPoly> duals;
        for (int k = 0; k < ell; ++k) duals.emplace_back(random_dense(s, rng));
        const DualPoly top(random_dense(2 * s - 1, rng));
        duals.push_back(top);

        RandomInstance inst;
        inst.s = s;
        inst.ell = ell;
        inst.attempts = attempt;
        inst.system = InverseSystem(duals);
        inst.ideal = annihilator(inst.system, 2 * s);
        inst.gorenstein = annihilator(InverseSystem({top}), 2 * s);

        const auto shape = socle_shape(socle(inst.ideal, 2 * s).dims);
        const auto gshape = socle_shape(socle(inst.gorenstein, 2 * s).dims);
        if (!shape || shape->s != s || shape->ell != ell) continue;
        if (!gshape || gshape->s != s || gshape->ell != 0) continue;
        if (!is_compressed(inst.ideal, 2 * s).compressed) continue;
        if (!is_compressed(inst.gorenstein, 2 * s).compressed) continue;
        return inst;
    }
    throw VerificationError("random_instance: no valid instance after " + std::to_string(max_attempts) +
                            " attempts");
}

Ideal GeneratingSetDecomposition::gorenstein_generators() const {
    std::vector<HomogPoly> g = phi;
    g.insert(g.end(), psi.begin(), psi.end());
    return Ideal(std::move(g));
}

std::vector<int> GeneratingSetDecomposition::cut_positions() const {
    std::vector<int> pos;
    for (int k = s + 2 - ell; k <= s + 1; ++k) pos.push_back(k);
    return pos;
}

Ideal GeneratingSetDecomposition::trimmed_presentation() const {
    std::vector<HomogPoly> g(phi.begin(), phi.begin() + (s + 1 - ell));
    g.insert(g.end(), psi.begin(), psi.end());
    for (int k = s + 1 - ell; k < s + 1; ++k)
        for (int var = 0; var < 3; ++var) g.push_back(phi[k] * Monomial::variable(var));
    return Ideal(std::move(g));
}

GeneratingSetDecomposition genset_decomposition(const Ideal& ideal, const Ideal& gorenstein, int bound) {
    const int b = std::max(resolve_bound(ideal, bound), resolve_bound(gorenstein, bound));
    const auto shape = socle_shape(socle(ideal, b).dims);
    if (!shape || shape->s < 2) throw PreconditionError("socle of R/I is not of the form k(-s)^l + k(-2s+1)");
    const auto gshape = socle_shape(socle(gorenstein, b).dims);
    if (!gshape || gshape->ell != 0 || gshape->s != shape->s)
        throw PreconditionError("R/I_t is not Gorenstein with socle degree 2s-1");

    GeneratingSetDecomposition out;
    out.s = shape->s;
    out.ell = shape->ell;
    const int s = out.s;
    const IdealStrands si(ideal, s + 1);
    const IdealStrands st(gorenstein, s + 1);
    for (int d = 0; d < s; ++d)
        if (st[d].dim() != 0) throw PreconditionError("I_t has generators below degree s");
    if (st[s].dim() != s + 1 || si[s].dim() + out.ell != s + 1)
        throw PreconditionError("I_s and (I_t)_s do not have dimensions s+1-l and s+1");

    IncrementalBasis span(strand_dim(s));
    for (const auto& v : si[s].basis()) {
        if (!st[s].contains(v)) throw PreconditionError("I is not contained in I_t");
        span.insert(v);
        out.phi.emplace_back(s, v);
    }
    for (const auto& v : st[s].basis())
        if (span.insert(v)) out.phi.emplace_back(s, v);

    IncrementalBasis next(strand_dim(s + 1));
    for (const auto& v : multiply_by_linear_forms(s, st[s].basis())) next.insert(v);
    for (const auto& v : st[s + 1].basis())
        if (next.insert(v)) out.psi.emplace_back(s + 1, v);

    if (!ideals_equal(out.gorenstein_generators(), gorenstein, 2 * s))
        throw VerificationError("phi and psi do not generate I_t");
    if (!ideals_equal(out.trimmed_presentation(), ideal, 2 * s))
        throw VerificationError("trimmed presentation differs from I");
    return out;
}

} // namespace trimcx
