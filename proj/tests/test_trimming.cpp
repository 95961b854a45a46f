#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trimcx/errors.hpp"
#include "trimcx/inverse_system.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/realize.hpp"
#include "trimcx/resolution.hpp"
#include "trimcx/trimming.hpp"

using namespace trimcx;
using testing::ideal_of;

TEST_CASE("split_summands on the Koszul complex") {
    const TrimmingData t = split_summands(koszul_complex(), {2});
    CHECK(t.keep == std::vector<int>{0, 1});
    REQUIRE(t.d0.size() == 1);
    const GradedMap& d0 = t.d0[0];
    REQUIRE(d0.source().rank() == 3);
    CHECK(d0(0, 0).is_zero());
    CHECK((d0(0, 1) == parse_homog("x") || d0(0, 1) == parse_homog("-x")));
    CHECK((d0(0, 2) == parse_homog("y") || d0(0, 2) == parse_homog("-y")));
    CHECK(t.split_twist(0) == 1);
    CHECK_THROWS_AS(split_summands(koszul_complex(), {3}), PreconditionError);
    CHECK_THROWS_AS(split_summands(koszul_complex(), {1, 1}), PreconditionError);
}

TEST_CASE("trimming e_z from the Koszul complex") {
    const TrimmingData t = prepare_trimming(koszul_complex(), {2});
    CHECK(rank(t.stacked_q(1).constant_part()) == 2);
    CHECK(rank(t.stacked_q(2).constant_part()) == 1);
    CHECK(t.stacked_q(3).is_zero());
    const ComplexMorphism alpha = trimming_morphism(t);
    CHECK(commutes(alpha));
    CHECK(verify_complex(trimming_top(t)));
    CHECK(verify_complex(trimming_bottom(t)));

    const Ideal j = trimmed_ideal(t);
    const Ideal ci = ideal_of({"x", "y", "z^2"});
    CHECK(ideals_equal(j, ci, 6));
    CHECK(mu(j) == 3);

    const ChainComplex cone = trimming_complex(t);
    CHECK(is_strand_exact(cone, 8));
    const BettiTable direct = betti_table(minimal_free_resolution(ci), true);
    CHECK(betti_table(cone) == direct);
    CHECK(trimmed_betti(t) == direct);
    CHECK(minimalize(cone).ranks() == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("no split summands") {
    const ChainComplex f = minimal_free_resolution(ideal_of({"x^2", "y^2", "z^2"}));
    const TrimmingData t = prepare_trimming(f, {});
    const ChainComplex cone = trimming_complex(t);
    CHECK(betti_table(cone) == betti_table(f, true));
    CHECK(ideals_equal(trimmed_ideal(t), ideal_of({"x^2", "y^2", "z^2"}), 8));
    CHECK(trimmed_betti(t) == betti_table(f, true));
}

TEST_CASE("splitting every summand") {
    const Ideal i = ideal_of({"x^2", "y^2", "z^2"});
    const TrimmingData t = prepare_trimming(minimal_free_resolution(i), {0, 1, 2});
    const Ideal j = trimmed_ideal(t);
    const Ideal expected = trim_ideal(i, {}, {0, 1, 2});
    CHECK(ideals_equal(j, expected, 10));
    const ChainComplex cone = trimming_complex(t);
    CHECK(betti_table(cone) == betti_table(minimal_free_resolution(expected), true));
    CHECK(trimmed_betti(t) == betti_table(cone));
}

TEST_CASE("trim_ideal") {
    const Ideal j = trim_ideal(Ideal::irrelevant(), {0, 1}, {2});
    CHECK(j.generators().size() == 5);
    CHECK(ideals_equal(j, ideal_of({"x", "y", "x*z", "y*z", "z^2"}), 6));
    CHECK(mu(j) == 3);
    CHECK(ideals_equal(trim_ideal(Ideal::irrelevant(), {0, 1, 2}, {}), Ideal::irrelevant(), 4));
    CHECK_THROWS_AS(trim_ideal(Ideal::irrelevant(), {0, 1}, {1}), PreconditionError);
}

TEST_CASE("custom a_i") {
    const Ideal a = ideal_of({"x", "y", "z^2"});
    const TrimmingData t = prepare_trimming(koszul_complex(), {2}, {a});
    const Ideal expected = ideal_of({"x", "y", "z^3"});
    CHECK(ideals_equal(trimmed_ideal(t), expected, 8));
    const BettiTable direct = betti_table(minimal_free_resolution(expected), true);
    CHECK(betti_table(trimming_complex(t)) == direct);
    CHECK(trimmed_betti(t) == direct);

    // d_0 has entries x and y, which are not in (x).
    CHECK_THROWS_AS(prepare_trimming(koszul_complex(), {2}, {ideal_of({"x", "y^2", "z^2"})}), PreconditionError);
}

TEST_CASE("quadratic presentation gives q_1 in positive degree") {
    for (int m = 2; m <= 3; ++m) {
        const ChainComplex f = buchsbaum_eisenbud(build_V(m, 0));
        const TrimmingData t = prepare_trimming(f, {2 * m - 1, 2 * m});
        CHECK(t.stacked_q(1).constant_part().is_zero());
        CHECK(t.stacked_q(2).constant_part().is_zero());
    }
}

TEST_CASE("trimming Gorenstein ideals gives type ell + 1") {
    for (int m = 2; m <= 3; ++m)
        for (int ell = 1; ell <= 2 * m; ++ell) {
            CAPTURE(m);
            CAPTURE(ell);
            const ChainComplex f = buchsbaum_eisenbud(build_V(m, 0));
            std::vector<int> cut;
            for (int i = 2 * m + 1 - ell; i <= 2 * m; ++i) cut.push_back(i);
            const TrimmingData t = prepare_trimming(f, cut);
            const BettiTable b = trimmed_betti(t);
            CHECK(b.totals().back() == ell + 1);
            CHECK(b == betti_table(trimming_complex(t)));
            CHECK(artinian_profile(trimmed_ideal(t)).type == ell + 1);
        }
}

TEST_CASE("random instance trimmed twice agrees with the direct resolution") {
    const RandomInstance r = random_instance(4, 2, 77);
    const GeneratingSetDecomposition g = genset_decomposition(r.ideal, r.gorenstein);
    const ChainComplex f = minimal_free_resolution(g.gorenstein_generators());
    std::vector<int> cut;
    for (int p : g.cut_positions()) cut.push_back(p - 1);
    const TrimmingData t = prepare_trimming(f, cut);
    CHECK(ideals_equal(trimmed_ideal(t), r.ideal, 12));
    const BettiTable direct = betti_table(minimal_free_resolution(r.ideal), true);
    CHECK(trimmed_betti(t) == direct);
    CHECK(betti_table(trimming_complex(t)) == direct);
}

TEST_CASE("realize (3,3)") {
    const Realization z = realize(3, 3);
    CHECK(z.even);
    CHECK(z.m == 2);
    CHECK(z.ell == 2);
    CHECK(z.cone_betti == z.expected_betti);
    CHECK(z.formula_betti == z.expected_betti);
    CHECK(z.cone_betti.totals() == std::vector<int>{1, 9, 11, 3});
    CHECK(z.matches());
    CHECK_THROWS_AS(realize(1, 5), PreconditionError);
    CHECK_THROWS_AS(realize(2, 2), PreconditionError);
}
