#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trimcx/errors.hpp"
#include "trimcx/inverse_system.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/realize.hpp"
#include "trimcx/resolution.hpp"
#include "trimcx/tor_algebra.hpp"

using namespace trimcx;
using testing::ideal_of;

namespace {

Vector negated(Vector v) {
    for (Scalar& s : v) s = -s;
    return v;
}

KoszulChain random_chain(const TorAlgebra& t, int p, int degree, std::mt19937_64& rng) {
    KoszulChain c = t.zero_chain(p, degree);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (HomogPoly& f : c.coeffs) {
        std::vector<Scalar> dense(strand_dim(degree - p));
        for (Scalar& s : dense) s = Scalar(coeff(rng));
        f = HomogPoly(degree - p, dense);
    }
    return c;
}

void check_against_betti(const Ideal& i) {
    const TorAlgebra t(i);
    const BettiTable b = betti_table(minimal_free_resolution(i), true);
    for (int p = 0; p <= 3; ++p) {
        CHECK(t.dim(p) == (p < static_cast<int>(b.totals().size()) ? b.totals()[p] : 0));
        for (int d = 0; d <= 3 * i.max_generator_degree() + 6; ++d) CHECK(t.dim(p, d) == b.at(p, d));
    }
}

} // namespace

TEST_CASE("Tor of the residue field") {
    const TorAlgebra t(Ideal::irrelevant());
    CHECK(t.dim(1) == 3);
    CHECK(t.dim(2) == 3);
    CHECK(t.dim(3) == 1);
    CHECK(t.rank_T1T1() == 3);
    const ClassReport r = classify_G(Ideal::irrelevant());
    CHECK(r.verdict == TorVerdict::NotG);
    CHECK(r.verdict_string().rfind("not-G", 0) == 0);
}

TEST_CASE("Tor of a Gorenstein ideal") {
    const Ideal pf = submax_pfaffians(build_V(2, 0));
    const TorAlgebra t = koszul_tor(pf);
    CHECK(t.dim(1) == 5);
    CHECK(t.dim(2) == 5);
    CHECK(t.dim(3) == 1);
    CHECK(t.rank_T1T1() == 0);
    CHECK(t.dim_T1T2() == 1);
    CHECK(delta_rank(t) == 5);
    const ClassReport r = classify_G(pf);
    CHECK(r.verdict == TorVerdict::G);
    CHECK(r.delta_rank == 5);
    CHECK(r.verdict_string() == "G(5)");
}

TEST_CASE("graded dimensions agree with Betti numbers") {
    check_against_betti(Ideal::irrelevant());
    check_against_betti(ideal_of({"x^2", "y^2", "z^2"}));
    check_against_betti(ideal_of({"x^2", "x*y", "y^3", "z^2", "x*z"}));
    check_against_betti(submax_pfaffians(build_V(2, 1)));
    check_against_betti(random_instance(3, 2, 4).ideal);
}

TEST_CASE("products are graded commutative") {
    for (const Ideal& i : {Ideal::irrelevant(), ideal_of({"x^2", "y^2", "z^2"}), random_instance(3, 1, 8).ideal}) {
        const TorAlgebra t(i);
        for (int a = 0; a < t.dim(1); ++a) {
            for (int b = 0; b < t.dim(1); ++b) CHECK(t.product(1, a, 1, b) == negated(t.product(1, b, 1, a)));
            for (int b = 0; b < t.dim(2); ++b) CHECK(t.product(1, a, 2, b) == t.product(2, b, 1, a));
        }
    }
}

TEST_CASE("products do not depend on the cycle representative") {
    std::mt19937_64 rng(31);
    for (const Ideal& i : {ideal_of({"x^2", "y^2", "z^2"}), submax_pfaffians(build_V(2, 1)), random_instance(3, 2, 12).ideal}) {
        const TorAlgebra t(i);
        for (int p = 1; p <= 2; ++p)
            for (int a = 0; a < t.dim(p); ++a) {
                const KoszulChain& z = t.representative(p, a);
                const KoszulChain moved = t.add(z, t.boundary(random_chain(t, p + 1, z.degree, rng)));
                CHECK(t.homology_class(moved) == t.homology_class(z));
                for (int b = 0; b < t.dim(1); ++b) {
                    const KoszulChain& w = t.representative(1, b);
                    const KoszulChain w2 = t.add(w, t.boundary(random_chain(t, 2, w.degree, rng)));
                    CHECK(t.homology_class(t.multiply(moved, w2)) == t.product(p, a, 1, b));
                }
            }
    }
}

TEST_CASE("non-cycles are rejected") {
    const TorAlgebra t(ideal_of({"x^2", "y^2", "z^2"}));
    KoszulChain c = t.zero_chain(1, 2);
    c.coeffs[0] = parse_homog("y");
    CHECK_THROWS_AS(t.homology_class(c), PreconditionError);
}

TEST_CASE("classification of realized ideals") {
    const Realization even = realize(4, 2);
    CHECK(even.report.verdict_string() == "G(4)");
    CHECK(even.report.type == 2);
    CHECK(even.report.mu == 7);

    const Realization odd = realize(2, 3);
    CHECK(odd.report.verdict_string() == "G(2)");
    CHECK(odd.report.type == 4);
    CHECK(odd.report.mu == 11);

    CHECK(realize(3, 3).report.delta_rank == 3);
}

TEST_CASE("check_bounds") {
    {
        const RandomInstance r = random_instance(4, 1, 3);
        const TorBoundsReport b = check_bounds(r.ideal, r.gorenstein, artinian_profile(r.ideal));
        CHECK(b.hypothesis);
        CHECK(b.lower_bound_holds);
        CHECK(b.equality_holds);
        CHECK(b.verdict_holds);
        CHECK(b.delta_rank == b.mu - 3);
        CHECK(b.t1_s == b.t1_s_expected);
        CHECK(b.t2_s1 == b.t2_s1_expected);
        CHECK(b.t2_s2 == b.t2_s2_euler);
    }
    {
        const RandomInstance r = random_instance(3, 2, 3);
        const TorBoundsReport b = check_bounds(r.ideal, r.gorenstein, artinian_profile(r.ideal));
        CHECK(b.lower_bound_holds);
        CHECK(b.delta_rank >= b.mu - 6);
        CHECK(b.t2_s2 == b.t2_s2_euler);
    }
}
