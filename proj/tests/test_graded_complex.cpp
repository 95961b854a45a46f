#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trimcx/errors.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/resolution.hpp"

using namespace trimcx;

namespace {

GradedMap identity_map(const GradedFreeModule& m) {
    GradedMap id(m, m);
    for (int i = 0; i < m.rank(); ++i) id.set(i, i, HomogPoly::constant(Scalar(1)));
    return id;
}

ComplexMorphism identity_morphism(const ChainComplex& c) {
    ComplexMorphism a{c, c, {}};
    for (int k = 0; k <= c.length(); ++k) a.components.push_back(identity_map(c.module(k)));
    return a;
}

// Total homology dimension of c in internal degree d, all homological degrees.
int homology_in_degree(const ChainComplex& c, int d) {
    int total = 0;
    for (int k = 0; k <= c.length(); ++k) {
        const int dim = c.module(k).strand_dim(d);
        const int out = k == 0 ? 0 : rank(c.differential(k).strand_matrix(d));
        const int in = k == c.length() ? 0 : rank(c.differential(k + 1).strand_matrix(d));
        total += dim - out - in;
    }
    return total;
}

} // namespace

TEST_CASE("verify_complex") {
    CHECK(verify_complex(koszul_complex()));
    GradedMap d1(GradedFreeModule{{1}}, GradedFreeModule{{0}});
    d1.set(0, 0, parse_homog("x"));
    GradedMap d2(GradedFreeModule{{2}}, GradedFreeModule{{1}});
    d2.set(0, 0, parse_homog("x"));
    CHECK_FALSE(verify_complex(ChainComplex(GradedFreeModule{{0}}, {d1, d2})));
    CHECK(verify_complex(buchsbaum_eisenbud(build_V(2, 0))));
}

TEST_CASE("GradedMap degree discipline") {
    GradedMap f(GradedFreeModule{{2, 3}}, GradedFreeModule{{0}});
    CHECK(f.forced_degree(0, 1) == 3);
    CHECK_THROWS_AS(f.set(0, 0, parse_homog("x")), PreconditionError);
    f.set(0, 0, parse_homog("x*y"));
    f.set(0, 1, parse_homog("z^3"));
    CHECK_FALSE(f.has_unit_entry());
    CHECK(f.constant_part().is_zero());
}

TEST_CASE("strand matrices compose") {
    const ChainComplex k = koszul_complex();
    for (int d = 0; d <= 5; ++d) {
        const GradedMap c = compose(k.differential(1), k.differential(2));
        CHECK(c.strand_matrix(d) == k.differential(1).strand_matrix(d) * k.differential(2).strand_matrix(d));
        CHECK(c.strand_matrix(d).is_zero());
    }
}

TEST_CASE("Koszul complex") {
    const ChainComplex k = koszul_complex();
    CHECK(k.ranks() == std::vector<int>{1, 3, 3, 1});
    CHECK(is_strand_exact(k, 8));
    const BettiTable b = betti_table(k, true);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 1) == 3);
    CHECK(b.at(2, 2) == 3);
    CHECK(b.at(3, 3) == 1);
    CHECK(b.totals() == std::vector<int>{1, 3, 3, 1});
    CHECK(minimalize(k).ranks() == std::vector<int>{1, 3, 3, 1});
    for (int d = 1; d <= 6; ++d) CHECK(homology_in_degree(k, d) == 0);
    CHECK(homology_in_degree(k, 0) == 1);
}

TEST_CASE("cone over the identity is contractible") {
    const ChainComplex k = koszul_complex();
    const ComplexMorphism id = identity_morphism(k);
    CHECK(commutes(id));
    const ChainComplex cone = mapping_cone(id);
    CHECK(verify_complex(cone));
    CHECK(cone.ranks() == std::vector<int>{1, 4, 6, 4, 1});
    for (int d = 0; d <= 6; ++d) CHECK(homology_in_degree(cone, d) == 0);
    const ChainComplex reduced = minimalize(cone);
    CHECK(verify_complex(reduced));
    CHECK(reduced.ranks() == std::vector<int>{0});
}

TEST_CASE("cone over the zero morphism is a shifted direct sum") {
    const ChainComplex k = koszul_complex();
    ComplexMorphism zero{k, k, {}};
    for (int i = 0; i <= k.length(); ++i) zero.components.emplace_back(k.module(i), k.module(i));
    CHECK(commutes(zero));
    const ChainComplex cone = mapping_cone(zero);
    CHECK(verify_complex(cone));
    CHECK(cone.ranks() == std::vector<int>{1, 4, 6, 4, 1});
    CHECK(cone.module(2) == direct_sum(k.module(1), k.module(2)));
    const BettiTable b = betti_table(cone);
    CHECK(b.at(1, 0) == 1);
    CHECK(b.at(4, 3) == 1);
    CHECK(b.at(2, 1) == 3);
    CHECK(b.at(2, 2) == 3);
}

TEST_CASE("non-commuting morphism is detected") {
    const ChainComplex k = koszul_complex();
    ComplexMorphism bad = identity_morphism(k);
    bad.components[1] = GradedMap(k.module(1), k.module(1));
    CHECK_FALSE(commutes(bad));
}

TEST_CASE("BettiTable rendering") {
    BettiTable b;
    b.add(0, 0);
    b.add(1, 2, 3);
    b.add(2, 3, 2);
    CHECK(b.totals() == std::vector<int>{1, 3, 2});
    const std::string kv = b.render_kv();
    CHECK(kv.find("beta 1 2 3") != std::string::npos);
    const std::string text = b.render();
    CHECK(text.find("total") != std::string::npos);
}
