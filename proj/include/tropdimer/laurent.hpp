#pragma once

#include "tropdimer/lattice_geom.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropdimer {

// Laurent polynomial in z1, z2 with rational exponents and rational coefficients.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial constant(const Rat& c);
    static LaurentPolynomial monomial(const Vec2& exponent, const Rat& c = 1);

    const std::map<Vec2, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rat coefficient(const Vec2& e) const;
    Int exponent_denominator() const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial scaled(const Rat& c) const;
    LaurentPolynomial shifted(const Vec2& e) const;  // multiply by z^e
    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    // Constant term first, remaining terms by descending lexicographic exponent.
    std::vector<std::pair<Vec2, Rat>> ordered_terms() const;
    std::string str() const;

private:
    void add_term(const Vec2& e, const Rat& c);
    std::map<Vec2, Rat> terms_;
};

std::string format_monomial(const Vec2& exponent);

}  // namespace tropdimer
