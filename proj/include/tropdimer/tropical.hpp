#pragma once

#include "tropdimer/lattice_geom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropdimer {

struct TropicalTerm {
    Vec2 exponent;
    Rat coefficient;
};

// Max-plus polynomial q -> max(c + <a, q>). A concave polynomial is the negative of the
// max-plus polynomial built from its stored terms.
class TropicalPolynomial {
public:
    TropicalPolynomial() = default;
    explicit TropicalPolynomial(std::vector<TropicalTerm> terms, bool concave = false);
    // Concave min-plus polynomial q -> min(c + <a, q>).
    static TropicalPolynomial min_plus(const std::vector<TropicalTerm>& terms);

    const std::vector<TropicalTerm>& terms() const { return terms_; }
    bool concave() const { return concave_; }
    Rat evaluate(const Vec2& q) const;
    // The same function written in coordinates q = map(p).
    TropicalPolynomial pullback(const UnimodularMap& map) const;
    std::string str() const;

private:
    std::vector<TropicalTerm> terms_;
    bool concave_ = false;
};

enum class Color { White, Black };
std::string color_name(Color c);

// An edge of a tropical curve: a segment between two vertices, a ray, or a leaf segment that
// stops at a point which is not a vertex of the curve.
struct CurveEdge {
    int from = -1;
    int to = -1;                 // vertex index, or -1
    Vec2 direction;              // primitive integer direction leaving `from`
    long long multiplicity = 1;
    std::optional<Vec2> end;     // leaf endpoint when to == -1

    bool is_ray() const { return to < 0 && !end; }
    bool is_leaf() const { return to < 0 && end.has_value(); }
};

struct TropicalCurve {
    std::vector<Vec2> vertices;
    std::vector<CurveEdge> edges;

    int add_vertex(const Vec2& p);
    void add_segment(int a, int b, long long mult = 1);
    void add_ray(int a, const Vec2& dir, long long mult = 1);
    void add_leaf(int a, const Vec2& end, long long mult = 1);
    // (primitive direction, multiplicity) pairs leaving vertex v.
    std::vector<std::pair<Vec2, long long>> outgoing(int v) const;
    bool empty() const { return vertices.empty() && edges.empty(); }
    TropicalCurve translated(const Vec2& t) const;
};

RatPolygon newton_polytope(const TropicalPolynomial& phi);
TropicalPolynomial dual_function(const RatPolygon& polygon, Color color);
TropicalCurve nonlinearity_locus(const TropicalPolynomial& phi);
bool check_balancing(const TropicalCurve& curve);
long long genus_degree(long long d);
long long genus_of(const RatPolygon& lattice_polygon);
bool is_fan(const TropicalCurve& curve);
// Merged (primitive ray, total multiplicity) list of a fan, sorted.
std::vector<std::pair<Vec2, long long>> fan_rays(const TropicalCurve& fan);
bool fan_equal(const TropicalCurve& a, const TropicalCurve& b);
// Image of a curve under the linear map M^{-T}, the action dual to M on exponents.
TropicalCurve transform_curve(const TropicalCurve& curve, const UnimodularMap& exponent_map);
// True when the regular subdivision induced by the coefficients is unimodular.
bool is_smooth(const TropicalPolynomial& phi);

struct SubdivisionCell {
    Vec2 dual_vertex;
    std::vector<int> terms;  // indices of terms attaining the maximum
    RatPolygon polygon;      // hull of their exponents
};
std::vector<SubdivisionCell> regular_subdivision(const TropicalPolynomial& phi);

}  // namespace tropdimer
