#pragma once

#include "trimcx/field.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace trimcx {

inline constexpr std::array<char, 3> variable_names = {'x', 'y', 'z'};

/// x^a y^b z^c.
struct Monomial {
    int a = 0;
    int b = 0;
    int c = 0;

    int degree() const { return a + b + c; }
    int exponent(int var) const { return var == 0 ? a : (var == 1 ? b : c); }

    friend Monomial operator*(Monomial u, Monomial v) { return {u.a + v.a, u.b + v.b, u.c + v.c}; }
    friend bool operator==(Monomial, Monomial) = default;

    bool divides(Monomial m) const { return a <= m.a && b <= m.b && c <= m.c; }
    /// m / this; caller guarantees divisibility.
    Monomial quotient_of(Monomial m) const { return {m.a - a, m.b - b, m.c - c}; }

    static Monomial variable(int var) {
        return {var == 0 ? 1 : 0, var == 1 ? 1 : 0, var == 2 ? 1 : 0};
    }
};

/// dim_k R_d = binom(d+2, 2); zero for negative d.
constexpr int strand_dim(int d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

// Graded lex: within degree d, x^d first, then x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ...
// With e = b + c the position is e(e+1)/2 + c.
constexpr int monomial_index(Monomial m) {
    const int e = m.b + m.c;
    return e * (e + 1) / 2 + m.c;
}

Monomial monomial_at(int degree, int index);

std::vector<Monomial> strand_basis(int d);

std::string to_string(Monomial m);

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Homogeneous polynomial in k[x,y,z]. Terms sorted by strand index, no zero
/// coefficients. The zero polynomial still carries a degree.
class HomogPoly {
public:
    HomogPoly() = default;
    explicit HomogPoly(int degree) : degree_(degree) {}
    /// Dense coefficients in strand_basis(degree) order.
    HomogPoly(int degree, const std::vector<Scalar>& dense);

    static HomogPoly monomial(Monomial m, Scalar c = Scalar(1));
    static HomogPoly constant(Scalar c) { return monomial({}, c); }
    static HomogPoly variable(int var) { return monomial(Monomial::variable(var)); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coefficient(Monomial m) const;
    std::vector<Scalar> dense() const;
    /// Constant term if degree 0, otherwise zero.
    Scalar constant_value() const;

    /// Zero polynomials may be re-annotated; nonzero ones must keep their degree.
    HomogPoly with_degree(int d) const;

    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    HomogPoly& operator*=(Scalar s);

    friend HomogPoly operator+(HomogPoly f, const HomogPoly& g) { return f += g; }
    friend HomogPoly operator-(HomogPoly f, const HomogPoly& g) { return f -= g; }
    friend HomogPoly operator*(HomogPoly f, Scalar s) { return f *= s; }
    friend HomogPoly operator*(Scalar s, HomogPoly f) { return f *= s; }
    HomogPoly operator-() const { return *this * Scalar(-1); }
    friend HomogPoly operator*(const HomogPoly& f, const HomogPoly& g);
    friend HomogPoly operator*(const HomogPoly& f, Monomial m);

    /// Equality of polynomials; zero polynomials compare equal regardless of degree tag.
    friend bool operator==(const HomogPoly& f, const HomogPoly& g);

private:
    HomogPoly& axpy(Scalar s, const HomogPoly& o);

    int degree_ = 0;
    std::vector<Term> terms_;
};

HomogPoly mul(const HomogPoly& f, const HomogPoly& g);

std::string to_string(const HomogPoly& f);
std::ostream& operator<<(std::ostream& os, const HomogPoly& f);

/// Parses `3*x^2*y - z^3`, `x*y + 1/2*z^2`, `0`. Throws InputError on bad
/// syntax or mixed degrees. A bare `0` parses with degree `zero_degree`.
HomogPoly parse_homog(std::string_view text, int zero_degree = 0);

} // namespace trimcx
