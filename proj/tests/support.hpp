#pragma once

#include "trimcx/graded.hpp"
#include "trimcx/ideal.hpp"
#include "trimcx/linalg.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/poly.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace trimcx;

inline Ideal ideal_of(std::initializer_list<const char*> gens) {
    std::vector<HomogPoly> v;
    for (const char* g : gens) v.push_back(parse_homog(g));
    return Ideal(std::move(v));
}

inline Matrix random_matrix(int rows, int cols, std::mt19937_64& rng, int zero_percent = 0) {
    Matrix a(rows, cols);
    std::uniform_int_distribution<std::int64_t> coeff(0, Scalar::characteristic() - 1);
    std::uniform_int_distribution<int> pct(0, 99);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a(r, c) = pct(rng) < zero_percent ? Scalar(0) : Scalar(coeff(rng));
    return a;
}

// Rank-deficient by construction: product of rows x k and k x cols.
inline Matrix low_rank_matrix(int rows, int cols, int k, std::mt19937_64& rng) {
    return random_matrix(rows, k, rng) * random_matrix(k, cols, rng);
}

// Leibniz expansion, only for tiny matrices.
inline Scalar leibniz_det(const Matrix& a) {
    const int n = a.rows();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Scalar total(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Scalar term(inversions % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term *= a(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void put(BettiTable& b, int i, int j, int count) {
    if (count > 0) b.add(i, j, count);
}

// Gorenstein table of Pf(V_m^j).
inline BettiTable pfaffian_table(int m, int j) {
    BettiTable b;
    put(b, 0, 0, 1);
    put(b, 1, 2 * m - j, 2 * m + 1 - j);
    put(b, 1, 2 * m - j + 1, j);
    put(b, 2, 2 * m - j + 1, j);
    put(b, 2, 2 * m - j + 2, 2 * m + 1 - j);
    put(b, 3, 4 * m - 2 * j + 2, 1);
    return b;
}

// Hilbert function of R/I by counting monomials outside the strand of I,
// computed with a fresh elimination of all monomial multiples.
inline std::vector<int> hilbert_by_multiples(const Ideal& ideal, int top) {
    std::vector<int> h;
    for (int d = 0; d <= top; ++d) {
        const StrandMatrix m = strand_multiplication_matrix(ideal.generators(), d);
        h.push_back(strand_dim(d) - (m.values.cols() == 0 ? 0 : rank(m.values)));
    }
    return h;
}

inline Scalar evaluate(const HomogPoly& f, const std::array<Scalar, 3>& pt) {
    Scalar total(0);
    for (const Term& t : f.terms()) {
        Scalar v = t.coeff;
        for (int i = 0; i < t.mono.a; ++i) v *= pt[0];
        for (int i = 0; i < t.mono.b; ++i) v *= pt[1];
        for (int i = 0; i < t.mono.c; ++i) v *= pt[2];
        total += v;
    }
    return total;
}

inline Matrix evaluate(const SkewMatrix& m, const std::array<Scalar, 3>& pt) {
    Matrix out(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out(i, j) = evaluate(m(i, j), pt);
    return out;
}

inline int binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

} // namespace testing
