#include "tropdimer/laurent.hpp"

namespace tropdimer {

LaurentPolynomial LaurentPolynomial::constant(const Rat& c) { return monomial(Vec2(0, 0), c); }

LaurentPolynomial LaurentPolynomial::monomial(const Vec2& exponent, const Rat& c) {
    LaurentPolynomial p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPolynomial::add_term(const Vec2& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rat LaurentPolynomial::coefficient(const Vec2& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Int LaurentPolynomial::exponent_denominator() const {
    Int d = 1;
    for (const auto& [e, c] : terms_) d = lcm(d, common_denominator(e));
    return d;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return scaled(-1); }

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + (-o); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rat& c) const {
    LaurentPolynomial r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Vec2& s) const {
    LaurentPolynomial r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + s, v);
    return r;
}

std::vector<std::pair<Vec2, Rat>> LaurentPolynomial::ordered_terms() const {
    std::vector<std::pair<Vec2, Rat>> out;
    auto c = terms_.find(Vec2(0, 0));
    if (c != terms_.end()) out.push_back(*c);
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        if (!it->first.is_zero()) out.push_back(*it);
    return out;
}

namespace {

std::string power(const char* var, const Rat& e) {
    std::string s = var;
    if (e == 1) return s;
    if (is_integer(e)) return s + "^" + to_string(e);
    return s + "^(" + to_string(e) + ")";
}

}  // namespace

std::string format_monomial(const Vec2& e) {
    std::string s;
    if (e.x != 0) s = power("z1", e.x);
    if (e.y != 0) s += (s.empty() ? "" : "*") + power("z2", e.y);
    return s.empty() ? "1" : s;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered_terms()) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e.is_zero()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += format_monomial(e);
        }
    }
    return out;
}

}  // namespace tropdimer
