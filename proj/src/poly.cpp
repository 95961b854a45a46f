#include "trimcx/poly.hpp"

#include "trimcx/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

namespace trimcx {

Monomial monomial_at(int degree, int index) {
    int e = 0;
    while ((e + 1) * (e + 2) / 2 <= index) ++e;
    const int c = index - e * (e + 1) / 2;
    return {degree - e, e - c, c};
}

std::vector<Monomial> strand_basis(int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    out.reserve(strand_dim(d));
    for (int e = 0; e <= d; ++e)
        for (int c = 0; c <= e; ++c) out.push_back({d - e, e - c, c});
    return out;
}

std::string to_string(Monomial m) {
    std::string out;
    for (int v = 0; v < 3; ++v) {
        const int e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_names[v];
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

HomogPoly::HomogPoly(int degree, const std::vector<Scalar>& dense) : degree_(degree) {
    for (int i = 0; i < static_cast<int>(dense.size()); ++i)
        if (!dense[i].is_zero()) terms_.push_back({monomial_at(degree, i), dense[i]});
}

HomogPoly HomogPoly::monomial(Monomial m, Scalar c) {
    HomogPoly f(m.degree());
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
}

Scalar HomogPoly::coefficient(Monomial m) const {
    if (m.degree() != degree_) return Scalar(0);
    const int idx = monomial_index(m);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const Term& t, int i) { return monomial_index(t.mono) < i; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Scalar(0);
}

std::vector<Scalar> HomogPoly::dense() const {
    std::vector<Scalar> out(strand_dim(degree_));
    for (const auto& t : terms_) out[monomial_index(t.mono)] = t.coeff;
    return out;
}

Scalar HomogPoly::constant_value() const {
    if (degree_ != 0 || terms_.empty()) return Scalar(0);
    return terms_.front().coeff;
}

HomogPoly HomogPoly::with_degree(int d) const {
    if (!is_zero() && d != degree_)
        throw PreconditionError("cannot change the degree of a nonzero polynomial");
    HomogPoly f = *this;
    f.degree_ = d;
    return f;
}

HomogPoly& HomogPoly::axpy(Scalar s, const HomogPoly& o) {
    if (o.is_zero() || s.is_zero()) return *this;
    if (is_zero()) {
        degree_ = o.degree_;
    } else if (o.degree_ != degree_) {
        throw PreconditionError("adding polynomials of degrees " + std::to_string(degree_) +
                                " and " + std::to_string(o.degree_));
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        const int ii = i != terms_.end() ? monomial_index(i->mono) : 1 << 30;
        const int jj = j != o.terms_.end() ? monomial_index(j->mono) : 1 << 30;
        if (ii < jj) {
            merged.push_back(*i++);
        } else if (jj < ii) {
            merged.push_back({j->mono, s * j->coeff});
            ++j;
        } else {
            Scalar c = i->coeff + s * j->coeff;
            if (!c.is_zero()) merged.push_back({i->mono, c});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) { return axpy(Scalar(1), o); }
HomogPoly& HomogPoly::operator-=(const HomogPoly& o) { return axpy(Scalar(-1), o); }

HomogPoly& HomogPoly::operator*=(Scalar s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
}

HomogPoly operator*(const HomogPoly& f, const HomogPoly& g) {
    const int d = f.degree_ + g.degree_;
    if (f.is_zero() || g.is_zero()) return HomogPoly(d);
    if (g.terms_.size() == 1) return f * g.terms_.front().mono * g.terms_.front().coeff;
    if (f.terms_.size() == 1) return g * f.terms_.front().mono * f.terms_.front().coeff;
    std::vector<Scalar> acc(strand_dim(d));
    for (const auto& s : f.terms_)
        for (const auto& t : g.terms_) acc[monomial_index(s.mono * t.mono)] += s.coeff * t.coeff;
    return HomogPoly(d, acc);
}

HomogPoly operator*(const HomogPoly& f, Monomial m) {
    // multiplication by a monomial preserves graded-lex order
    HomogPoly out(f.degree_ + m.degree());
    out.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) out.terms_.push_back({t.mono * m, t.coeff});
    return out;
}

bool operator==(const HomogPoly& f, const HomogPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.degree_ != g.degree_ || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
        if (!(f.terms_[i].mono == g.terms_[i].mono) || !(f.terms_[i].coeff == g.terms_[i].coeff))
            return false;
    return true;
}

HomogPoly mul(const HomogPoly& f, const HomogPoly& g) { return f * g; }

std::string to_string(const HomogPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::int64_t c = t.coeff.signed_value();
        if (c < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        first = false;
        const bool is_one = t.mono.degree() == 0;
        if (c != 1 || is_one) {
            out += std::to_string(c);
            if (!is_one) out += '*';
        }
        if (!is_one) out += to_string(t.mono);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const HomogPoly& f) { return os << to_string(f); }

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    HomogPoly parse(int zero_degree) {
        std::vector<std::pair<Monomial, Scalar>> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Scalar sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = Scalar(-1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = parse_term();
            terms.push_back({m, sign * c});
            skip_ws();
        }
        std::optional<int> degree;
        for (const auto& [m, c] : terms) {
            if (c.is_zero()) continue;
            if (degree && *degree != m.degree())
                throw InputError("inhomogeneous polynomial: '" + std::string(s_) + "'");
            degree = m.degree();
        }
        HomogPoly f(degree.value_or(zero_degree));
        for (const auto& [m, c] : terms)
            if (!c.is_zero()) f += HomogPoly::monomial(m, c);
        return f.is_zero() ? HomogPoly(degree.value_or(zero_degree)) : f;
    }

private:
    std::pair<Monomial, Scalar> parse_term() {
        Monomial m;
        Scalar c(1);
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (at_end()) fail("dangling operator");
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                Scalar num = parse_integer();
                skip_ws();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip_ws();
                    Scalar den = parse_integer();
                    if (den.is_zero()) fail("zero denominator");
                    num /= den;
                }
                c *= num;
            } else if (ch == 'x' || ch == 'y' || ch == 'z') {
                ++pos_;
                int e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = parse_small_int();
                }
                const int var = ch - 'x';
                if (var == 0) m.a += e;
                if (var == 1) m.b += e;
                if (var == 2) m.c += e;
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) ++pos_;
        }
        return {m, c};
    }

    Scalar parse_integer() {
        const std::size_t start = pos_;
        Scalar v(0);
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * Scalar(10) + Scalar(peek() - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return v;
    }

    int parse_small_int() {
        int v = 0;
        const char* b = s_.data() + pos_;
        const char* e = s_.data() + s_.size();
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || v < 0) fail("bad exponent");
        pos_ += static_cast<std::size_t>(p - b);
        return v;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " +
                         msg + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

HomogPoly parse_homog(std::string_view text, int zero_degree) {
    return PolyParser(text).parse(zero_degree);
}

} // namespace trimcx
