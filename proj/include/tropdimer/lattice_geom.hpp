#pragma once

#include "tropdimer/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tropdimer {

struct Vec2 {
    Rat x;
    Rat y;

    Vec2() = default;
    Vec2(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    Vec2(long long x_, long long y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
    Vec2 operator/(const Rat& s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const { return x < o.x || (x == o.x && y < o.y); }
    bool operator>(const Vec2& o) const { return o < *this; }
    bool operator<=(const Vec2& o) const { return !(o < *this); }

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_integral() const;
    std::string str() const;
};

inline Vec2 operator*(const Rat& s, const Vec2& v) { return v * s; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }
std::ostream& operator<<(std::ostream& os, const Vec2& v);

// Least common denominator of both coordinates.
Int common_denominator(const Vec2& v);
// Primitive integer vector with the same direction; v must be nonzero.
Vec2 primitive_direction(const Vec2& v);
// Lattice length of v measured in (1/n)Z^2; v*n must be integral.
Int lattice_length(const Vec2& v, const Int& n = 1);
bool parallel(const Vec2& a, const Vec2& b);
// Counterclockwise angular comparison of nonzero vectors, starting from +x.
bool angle_less(const Vec2& a, const Vec2& b);

struct TorusPoint {
    Vec2 coords;
    bool operator==(const TorusPoint& o) const { return coords == o.coords; }
    bool operator<(const TorusPoint& o) const { return coords < o.coords; }
};

TorusPoint reduce_mod_lattice(const Vec2& p);
bool congruent_mod_lattice(const Vec2& a, const Vec2& b);

struct H1Class {
    long long a = 0;
    long long b = 0;
    auto operator<=>(const H1Class&) const = default;
    H1Class operator+(const H1Class& o) const { return {a + o.a, b + o.b}; }
    H1Class operator-() const { return {-a, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    std::string str() const;
};

H1Class to_class(const Vec2& integral_vector);
Vec2 to_vec(const H1Class& c);
long long intersection_number(const H1Class& c1, const H1Class& c2);
long long signed_intersection(const H1Class& c1, const H1Class& c2);

struct Segment {
    Vec2 a;
    Vec2 b;
};

class RatPolygon {
public:
    RatPolygon() = default;
    // Vertices must be in convex position (either orientation); stored counterclockwise
    // starting at the lexicographically smallest vertex.
    static RatPolygon from_vertices(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Vec2& operator[](std::size_t i) const { return vertices_[i]; }
    const Vec2& vertex(long long i) const;  // cyclic index
    bool degenerate() const { return vertices_.size() < 3; }
    bool is_point() const { return vertices_.size() == 1; }
    bool is_segment() const { return vertices_.size() == 2; }

    Rat area() const;
    Vec2 centroid() const;  // vertex average
    std::vector<Segment> edges() const;
    bool contains(const Vec2& p) const;           // closed
    bool contains_interior(const Vec2& p) const;  // open
    bool on_boundary(const Vec2& p) const;
    int index_of(const Vec2& p) const;  // -1 when p is not a vertex
    RatPolygon translated(const Vec2& t) const;
    bool integral() const;
    bool operator==(const RatPolygon& o) const { return vertices_ == o.vertices_; }

private:
    std::vector<Vec2> vertices_;
};

// Minimal convex polygon containing the points; degenerate for collinear input.
RatPolygon convex_hull(const std::vector<Vec2>& points);
RatPolygon minkowski_sum(const RatPolygon& a, const RatPolygon& b);
// Keeps the part of a convex polygon with dot(normal, p) <= bound.
RatPolygon clip_halfplane(const RatPolygon& poly, const Vec2& normal, const Rat& bound);
RatPolygon intersect(const RatPolygon& a, const RatPolygon& b);
bool interiors_overlap(const RatPolygon& a, const RatPolygon& b);
std::vector<std::array<long long, 2>> interior_lattice_points(const RatPolygon& p);
RatPolygon dilated_unit_triangle(long long d);
bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

struct UnimodularMap {
    std::array<std::array<long long, 2>, 2> m{{{1, 0}, {0, 1}}};
    Vec2 t{0, 0};

    static UnimodularMap linear(long long a, long long b, long long c, long long d);
    long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Vec2 apply(const Vec2& p) const;         // affine
    Vec2 apply_linear(const Vec2& v) const;  // linear part only
    H1Class apply(const H1Class& c) const;
    UnimodularMap inverse() const;
    UnimodularMap compose(const UnimodularMap& inner) const;  // this after inner
    // Inverse transpose of the linear part, acting on covectors.
    UnimodularMap dual() const;
    bool operator==(const UnimodularMap& o) const { return m == o.m && t == o.t; }
};

}  // namespace tropdimer
