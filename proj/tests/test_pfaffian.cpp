#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trimcx/errors.hpp"
#include "trimcx/inverse_system.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/resolution.hpp"

using namespace trimcx;
using testing::evaluate;

namespace {

HomogPoly p(const char* t) { return parse_homog(t); }
HomogPoly zero(int d) { return HomogPoly(d); }

SkewMatrix random_constant_skew(int n, std::mt19937_64& rng) {
    PolyMatrix e(n, std::vector<HomogPoly>(n, HomogPoly(0)));
    std::uniform_int_distribution<int> c(-50, 50);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Scalar v(c(rng));
            e[i][j] = HomogPoly::constant(v);
            e[j][i] = HomogPoly::constant(-v);
        }
    return SkewMatrix(e);
}

} // namespace

TEST_CASE("build_U") {
    CHECK(build_U(2, 1) == PolyMatrix{{p("x^2"), p("z^2")}, {p("z"), p("y")}});
    CHECK(build_U(3, 1) == PolyMatrix{{zero(2), p("x^2"), p("z^2")}, {p("x^2"), p("z^2"), p("y^2")}, {p("z"), p("y"), zero(1)}});
    CHECK(build_U(3, 2) == PolyMatrix{{zero(2), p("x^2"), p("z^2")}, {p("x"), p("z"), p("y")}, {p("z"), p("y"), zero(1)}});
    CHECK_THROWS_AS(build_U(2, 3), PreconditionError);
}

TEST_CASE("build_V shape") {
    const SkewMatrix v = build_V(3, 3);
    CHECK(v.size() == 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(v(i, j) == -v(j, i));
    CHECK_FALSE(v.has_unit_entry());
    CHECK(build_V(2, 0).size() == 5);
}

TEST_CASE("SkewMatrix validation") {
    CHECK_THROWS_AS(SkewMatrix(PolyMatrix{{p("x"), p("y")}, {p("-y"), zero(1)}}), PreconditionError);
    CHECK_THROWS_AS(SkewMatrix(PolyMatrix{{zero(1), p("y")}, {p("y"), zero(1)}}), PreconditionError);
}

TEST_CASE("pfaffian small cases") {
    const HomogPoly f = p("x^2 - y*z");
    CHECK(pfaffian(SkewMatrix(PolyMatrix{{zero(2), f}, {-f, zero(2)}})) == f);

    // upper entries a..f at 12,13,14,23,24,34 are the six variables of degree 1 products
    const HomogPoly a = p("x"), b = p("y"), c = p("z"), d = p("x+y"), e = p("y-z"), g = p("x+z");
    const SkewMatrix m(PolyMatrix{{zero(1), a, b, c}, {-a, zero(1), d, e}, {-b, -d, zero(1), g}, {-c, -e, -g, zero(1)}});
    CHECK(pfaffian(m) == a * g - b * e + c * d);
}

TEST_CASE("pfaffian does not depend on the expansion row") {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 8; n += 2) {
        const SkewMatrix m = random_constant_skew(n, rng);
        const HomogPoly first = pfaffian(m, 0);
        for (int r = 1; r < n; ++r) CHECK(pfaffian(m, r) == first);
    }
    const SkewMatrix v = build_V(2, 1).deleted(2);
    const HomogPoly first = pfaffian(v, 0);
    for (int r = 1; r < v.size(); ++r) CHECK(pfaffian(v, r) == first);
}

TEST_CASE("Pf^2 = det") {
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 10; n += 2)
        for (int t = 0; t < 3; ++t) {
            const SkewMatrix m = random_constant_skew(n, rng);
            const Scalar pf = pfaffian(m).constant_value();
            CHECK(pf * pf == determinant(evaluate(m, {Scalar(0), Scalar(0), Scalar(0)})));
        }
    std::uniform_int_distribution<int> c(1, 1000);
    for (int m = 1; m <= 3; ++m)
        for (int j = 0; j <= m; ++j) {
            const SkewMatrix v = build_V(m, j);
            for (int i = 0; i < v.size(); ++i) {
                const SkewMatrix minor = v.deleted(i);
                const std::array<Scalar, 3> pt{Scalar(c(rng)), Scalar(c(rng)), Scalar(c(rng))};
                const Scalar pf = evaluate(pfaffian(minor), pt);
                CHECK(pf * pf == determinant(evaluate(minor, pt)));
            }
        }
}

TEST_CASE("submaximal Pfaffians") {
    const HomogPoly a = p("x"), b = p("y"), c = p("z");
    const SkewMatrix m(PolyMatrix{{zero(1), c, -b}, {-c, zero(1), a}, {b, -a, zero(1)}});
    const Ideal i = submax_pfaffians(m);
    CHECK(ideals_equal(i, Ideal::irrelevant(), 4));
    // signed generators satisfy M * pf = 0
    const auto pf = signed_submaximal_pfaffians(build_V(2, 1));
    const SkewMatrix v = build_V(2, 1);
    for (int r = 0; r < v.size(); ++r) {
        HomogPoly row(pf[0].degree() + v(r, 0).degree());
        for (int k = 0; k < v.size(); ++k) row += v(r, k) * pf[k];
        CHECK(row.is_zero());
    }
    CHECK_THROWS_AS(submax_pfaffians(build_V(2, 0).deleted(0)), PreconditionError);
}

TEST_CASE("Pfaffian families are compressed Gorenstein") {
    for (int m = 1; m <= 3; ++m)
        for (int j = 0; j <= m; ++j) {
            CAPTURE(m);
            CAPTURE(j);
            const Ideal pf = submax_pfaffians(build_V(m, j));
            CHECK(mu(pf) == 2 * m + 1);
            const ArtinianProfile prof = artinian_profile(pf);
            CHECK(prof.type == 1);
            CHECK(prof.top_socle_degree == 4 * m - 2 * j - 1);
            CHECK(prof.compressed);
            CHECK(betti_table(minimal_free_resolution(pf), true) == testing::pfaffian_table(m, j));
        }
    const Ideal v20 = submax_pfaffians(build_V(2, 0));
    CHECK(minimal_generators(v20).size() == 5);
    for (const HomogPoly& f : v20.generators()) CHECK(f.degree() == 4);
}

TEST_CASE("border placements") {
    // Only the default placement gives the Gorenstein table for every m <= 4.
    int good = 0;
    for (int fr = 0; fr < 2; ++fr)
        for (int lc = 0; lc < 2; ++lc) {
            const BorderConvention conv{fr == 1, lc == 1};
            bool all = true;
            for (int m = 1; m <= 4 && all; ++m)
                for (int j = 0; j <= m && all; ++j) {
                    try {
                        const Ideal pf = submax_pfaffians(build_V(m, j, conv));
                        all = betti_table(minimal_free_resolution(pf), true) == testing::pfaffian_table(m, j);
                    } catch (const Error&) {
                        all = false;
                    }
                }
            if (all) {
                ++good;
                CHECK_FALSE(conv.x2_in_first_row);
                CHECK_FALSE(conv.y_in_last_column);
            }
        }
    CHECK(good == 1);
}
