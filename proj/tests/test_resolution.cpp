#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trimcx/errors.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/resolution.hpp"

using namespace trimcx;
using testing::ideal_of;

namespace {

// Kernel dimension of phi in degree d, straight from the strand matrix.
int kernel_dim(const GradedMap& phi, int d) {
    return static_cast<int>(kernel_basis(phi.strand_matrix(d)).size());
}

void check_syzygies_span_kernel(const GradedMap& phi, const GradedMap& syz, int top) {
    CHECK(compose(phi, syz).is_zero());
    for (int d = 0; d <= top; ++d) CHECK(rank(syz.strand_matrix(d)) == kernel_dim(phi, d));
}

} // namespace

TEST_CASE("syzygy_step on (x, y, z)") {
    const GradedMap phi = generator_map(ideal_of({"x", "y", "z"}).generators());
    const GradedMap syz = syzygy_step(phi, 6);
    CHECK(syz.source().twists == std::vector<int>{2, 2, 2});
    CHECK_FALSE(syz.has_unit_entry());
    check_syzygies_span_kernel(phi, syz, 6);
}

TEST_CASE("syzygy_step on (x^2, y^2, z^2)") {
    const GradedMap phi = generator_map(ideal_of({"x^2", "y^2", "z^2"}).generators());
    const GradedMap syz = syzygy_step(phi, 8);
    CHECK(syz.source().twists == std::vector<int>{4, 4, 4});
    check_syzygies_span_kernel(phi, syz, 8);
}

TEST_CASE("syzygy_step on the Pfaffians of V_2^0") {
    const Ideal pf = submax_pfaffians(build_V(2, 0));
    const GradedMap phi = generator_map(pf.generators());
    const GradedMap syz = syzygy_step(phi, 10);
    CHECK(syz.source().twists == std::vector<int>(5, 6));
    check_syzygies_span_kernel(phi, syz, 10);
}

TEST_CASE("minimal_free_resolution examples") {
    const ChainComplex k = minimal_free_resolution(Ideal::irrelevant());
    CHECK(k.ranks() == std::vector<int>{1, 3, 3, 1});
    CHECK(betti_table(k, true) == betti_table(koszul_complex(), true));

    const ChainComplex ci = minimal_free_resolution(ideal_of({"x", "y", "z^2"}));
    CHECK(verify_complex(ci));
    CHECK(ci.module(1).twists == std::vector<int>{1, 1, 2});
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(ci.module(2).twists) == std::vector<int>{2, 3, 3});
    CHECK(ci.module(3).twists == std::vector<int>{4});

    const ChainComplex pf = minimal_free_resolution(submax_pfaffians(build_V(3, 1)));
    CHECK(betti_table(pf, true) == testing::pfaffian_table(3, 1));
    CHECK(is_strand_exact(pf, 14));
}

TEST_CASE("first differential uses minimal generators in input order") {
    const Ideal i = ideal_of({"y", "x", "x+y", "z^2", "x*z"});
    const ChainComplex f = minimal_free_resolution(i);
    const GradedMap& d1 = f.differential(1);
    REQUIRE(d1.source().rank() == 3);
    CHECK(d1(0, 0) == parse_homog("y"));
    CHECK(d1(0, 1) == parse_homog("x"));
    CHECK(d1(0, 2) == parse_homog("z^2"));
}

TEST_CASE("non-Artinian input is rejected") {
    CHECK_THROWS_AS(minimal_free_resolution(ideal_of({"x", "y^2"})), NotArtinianError);
}

TEST_CASE("resolutions are exact and match Hilbert functions") {
    const std::vector<Ideal> cases = {
        ideal_of({"x^2", "y^2", "z^2"}),
        ideal_of({"x^2", "x*y", "y^3", "z^2", "x*z"}),
        ideal_of({"x^3 + y*z^2", "y^3", "z^3 - x^2*y", "x*y*z"}),
        ideal_of({"x^2 + y^2", "x*y", "y*z", "z^3", "x*z^2"}),
    };
    for (const Ideal& i : cases) {
        const ChainComplex f = minimal_free_resolution(i);
        CHECK(verify_complex(f));
        CHECK(is_strand_exact(f, 16));
        // H_0: the image of d_1 in every degree is I_d.
        const auto h = testing::hilbert_by_multiples(i, 12);
        for (int d = 0; d <= 12; ++d)
            CHECK(strand_dim(d) - rank(f.differential(1).strand_matrix(d)) == h[d]);
        for (int k = 1; k <= f.length(); ++k) CHECK_FALSE(f.differential(k).has_unit_entry());
    }
}

TEST_CASE("Buchsbaum-Eisenbud complexes match the minimal resolution") {
    for (int m = 1; m <= 3; ++m)
        for (int j = 0; j <= m; ++j) {
            CAPTURE(m);
            CAPTURE(j);
            const SkewMatrix v = build_V(m, j);
            const ChainComplex be = buchsbaum_eisenbud(v);
            CHECK(verify_complex(be));
            CHECK(is_strand_exact(be, 4 * m + 4));
            const BettiTable expected = testing::pfaffian_table(m, j);
            CHECK(betti_table(be) == expected);
            CHECK(betti_table(minimal_free_resolution(submax_pfaffians(v)), true) == expected);
        }
    CHECK(betti_table(buchsbaum_eisenbud(build_V(3, 3))).at(1, 3) == 4);
    CHECK(betti_table(buchsbaum_eisenbud(build_V(3, 3))).at(1, 4) == 3);
}

TEST_CASE("lift_through") {
    const ChainComplex k = koszul_complex();
    const GradedMap& d1 = k.differential(1);
    // target = d1 applied to e_x, so a lift exists.
    GradedMap target(GradedFreeModule{{1}}, d1.target());
    target.set(0, 0, parse_homog("x"));
    const auto q = lift_through(d1, target);
    REQUIRE(q);
    CHECK(compose(d1, *q) == target);

    GradedMap unreachable(GradedFreeModule{{0}}, d1.target());
    unreachable.set(0, 0, HomogPoly::constant(Scalar(1)));
    CHECK_FALSE(lift_through(d1, unreachable));
}
