#include "tropdimer/tropical.hpp"
#include "tropdimer/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropdimer {

TropicalPolynomial::TropicalPolynomial(std::vector<TropicalTerm> terms, bool concave)
    : terms_(std::move(terms)), concave_(concave) {
    if (terms_.empty()) throw DomainError("tropical polynomial needs at least one term");
    for (std::size_t i = 0; i < terms_.size(); ++i)
        for (std::size_t j = i + 1; j < terms_.size(); ++j)
            if (terms_[i].exponent == terms_[j].exponent)
                throw DomainError("repeated exponent " + terms_[i].exponent.str());
}

TropicalPolynomial TropicalPolynomial::min_plus(const std::vector<TropicalTerm>& terms) {
    std::vector<TropicalTerm> neg;
    for (const auto& t : terms) neg.push_back({-t.exponent, -t.coefficient});
    return TropicalPolynomial(std::move(neg), true);
}

Rat TropicalPolynomial::evaluate(const Vec2& q) const {
    Rat best = terms_[0].coefficient + dot(terms_[0].exponent, q);
    for (const auto& t : terms_) best = std::max(best, t.coefficient + dot(t.exponent, q));
    return concave_ ? Rat(-best) : best;
}

TropicalPolynomial TropicalPolynomial::pullback(const UnimodularMap& map) const {
    std::vector<TropicalTerm> out;
    for (const auto& t : terms_) {
        // <a, A q + s> = <A^T a, q> + <a, s>
        Vec2 e{Rat(map.m[0][0]) * t.exponent.x + Rat(map.m[1][0]) * t.exponent.y,
               Rat(map.m[0][1]) * t.exponent.x + Rat(map.m[1][1]) * t.exponent.y};
        out.push_back({e, t.coefficient + dot(t.exponent, map.t)});
    }
    return TropicalPolynomial(std::move(out), concave_);
}

std::string TropicalPolynomial::str() const {
    std::ostringstream os;
    if (concave_) os << "-(";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " (+) ";
        const auto& t = terms_[i];
        std::vector<std::string> parts;
        if (t.coefficient != 0 || t.exponent.is_zero()) parts.push_back(to_string(t.coefficient));
        if (t.exponent.x != 0) parts.push_back("x1^" + to_string(t.exponent.x));
        if (t.exponent.y != 0) parts.push_back("x2^" + to_string(t.exponent.y));
        for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    }
    if (concave_) os << ")";
    return os.str();
}

std::string color_name(Color c) { return c == Color::White ? "white" : "black"; }

int TropicalCurve::add_vertex(const Vec2& p) {
    vertices.push_back(p);
    return static_cast<int>(vertices.size()) - 1;
}

void TropicalCurve::add_segment(int a, int b, long long mult) {
    CurveEdge e;
    e.from = a;
    e.to = b;
    e.direction = primitive_direction(vertices[b] - vertices[a]);
    e.multiplicity = mult;
    edges.push_back(e);
}

void TropicalCurve::add_ray(int a, const Vec2& dir, long long mult) {
    CurveEdge e;
    e.from = a;
    e.direction = primitive_direction(dir);
    e.multiplicity = mult;
    edges.push_back(e);
}

void TropicalCurve::add_leaf(int a, const Vec2& end, long long mult) {
    CurveEdge e;
    e.from = a;
    e.direction = primitive_direction(end - vertices[a]);
    e.multiplicity = mult;
    e.end = end;
    edges.push_back(e);
}

std::vector<std::pair<Vec2, long long>> TropicalCurve::outgoing(int v) const {
    std::vector<std::pair<Vec2, long long>> out;
    for (const auto& e : edges) {
        if (e.from == v) {
            Vec2 d = e.to >= 0 ? primitive_direction(vertices[e.to] - vertices[e.from])
                               : (e.end ? primitive_direction(*e.end - vertices[e.from]) : e.direction);
            out.emplace_back(d, e.multiplicity);
        }
        if (e.to == v) out.emplace_back(primitive_direction(vertices[e.from] - vertices[e.to]), e.multiplicity);
    }
    return out;
}

TropicalCurve TropicalCurve::translated(const Vec2& t) const {
    TropicalCurve c = *this;
    for (auto& v : c.vertices) v += t;
    for (auto& e : c.edges)
        if (e.end) e.end = *e.end + t;
    return c;
}

RatPolygon newton_polytope(const TropicalPolynomial& phi) {
    std::vector<Vec2> pts;
    for (const auto& t : phi.terms()) pts.push_back(phi.concave() ? -t.exponent : t.exponent);
    return convex_hull(pts);
}

TropicalPolynomial dual_function(const RatPolygon& polygon, Color color) {
    if (polygon.degenerate()) throw DomainError("dual function needs a two-dimensional polygon");
    std::vector<TropicalTerm> terms;
    for (const auto& v : polygon.vertices())
        terms.push_back({color == Color::White ? v : -v, Rat(0)});
    return TropicalPolynomial(std::move(terms), color == Color::Black);
}

namespace {

Int exponent_denominator(const TropicalPolynomial& phi) {
    Int d = 1;
    for (const auto& t : phi.terms()) d = lcm(d, common_denominator(t.exponent));
    return d;
}

std::optional<Vec2> solve2(const Vec2& r1, const Rat& b1, const Vec2& r2, const Rat& b2) {
    Rat det = cross(r1, r2);
    if (det == 0) return std::nullopt;
    return Vec2((b1 * r2.y - b2 * r1.y) / det, (r1.x * b2 - r2.x * b1) / det);
}

TropicalCurve collinear_locus(const TropicalPolynomial& phi, const Int& denom) {
    const auto& ts = phi.terms();
    std::vector<int> order(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ts[a].exponent < ts[b].exponent; });
    Vec2 base = ts[order.front()].exponent;
    Vec2 span = ts[order.back()].exponent - base;
    auto param = [&](int i) { return span.x != 0 ? (ts[i].exponent.x - base.x) / span.x : (ts[i].exponent.y - base.y) / span.y; };
    // upper hull of (t, c)
    std::vector<int> hull;
    for (int i : order) {
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull.back();
            Rat ta = param(a), tb = param(b), ti = param(i);
            Rat lhs = (ts[b].coefficient - ts[a].coefficient) * (ti - ta);
            Rat rhs = (ts[i].coefficient - ts[a].coefficient) * (tb - ta);
            if (lhs <= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    TropicalCurve curve;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const auto& a = ts[hull[k]];
        const auto& b = ts[hull[k + 1]];
        Vec2 d = b.exponent - a.exponent;
        Vec2 q = d * ((a.coefficient - b.coefficient) / dot(d, d));
        int v = curve.add_vertex(q);
        long long mult = to_ll(lattice_length(d, denom));
        curve.add_ray(v, rot90(d), mult);
        curve.add_ray(v, -rot90(d), mult);
    }
    return curve;
}

}  // namespace

std::vector<SubdivisionCell> regular_subdivision(const TropicalPolynomial& phi) {
    const auto& ts = phi.terms();
    std::vector<SubdivisionCell> cells;
    std::size_t n = ts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec2 r1 = ts[j].exponent - ts[i].exponent;
                Vec2 r2 = ts[k].exponent - ts[i].exponent;
                auto q = solve2(r1, ts[i].coefficient - ts[j].coefficient, r2, ts[i].coefficient - ts[k].coefficient);
                if (!q) continue;
                if (std::any_of(cells.begin(), cells.end(), [&](const SubdivisionCell& c) { return c.dual_vertex == *q; }))
                    continue;
                Rat value = ts[i].coefficient + dot(ts[i].exponent, *q);
                bool top = true;
                std::vector<int> tie;
                std::vector<Vec2> pts;
                for (std::size_t m = 0; m < n && top; ++m) {
                    Rat v = ts[m].coefficient + dot(ts[m].exponent, *q);
                    if (v > value) top = false;
                    else if (v == value) {
                        tie.push_back(static_cast<int>(m));
                        pts.push_back(ts[m].exponent);
                    }
                }
                if (!top) continue;
                cells.push_back({*q, tie, convex_hull(pts)});
            }
    std::sort(cells.begin(), cells.end(), [](const SubdivisionCell& a, const SubdivisionCell& b) { return a.dual_vertex < b.dual_vertex; });
    return cells;
}

TropicalCurve nonlinearity_locus(const TropicalPolynomial& phi) {
    TropicalCurve curve;
    if (phi.terms().size() < 2) return curve;
    Int denom = exponent_denominator(phi);
    std::vector<Vec2> exps;
    for (const auto& t : phi.terms()) exps.push_back(t.exponent);
    if (convex_hull(exps).degenerate()) return collinear_locus(phi, denom);

    auto cells = regular_subdivision(phi);
    struct Side { int cell; Vec2 dir; long long mult; };
    std::map<std::pair<Vec2, Vec2>, std::vector<Side>> by_edge;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        curve.add_vertex(cells[c].dual_vertex);
        for (const auto& e : cells[c].polygon.edges()) {
            Vec2 d = e.b - e.a;
            Vec2 normal{d.y, -d.x};
            auto key = e.a < e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
            by_edge[key].push_back({static_cast<int>(c), primitive_direction(normal), to_ll(lattice_length(d, denom))});
        }
    }
    for (const auto& [key, sides] : by_edge) {
        if (sides.size() == 1) {
            curve.add_ray(sides[0].cell, sides[0].dir, sides[0].mult);
        } else if (sides.size() == 2) {
            curve.add_segment(sides[0].cell, sides[1].cell, sides[0].mult);
        } else {
            throw DomainError("subdivision edge shared by more than two cells");
        }
    }
    return curve;
}

bool check_balancing(const TropicalCurve& curve) {
    for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
        Vec2 sum(0, 0);
        for (const auto& [d, m] : curve.outgoing(static_cast<int>(v))) sum += d * Rat(m);
        if (!sum.is_zero()) return false;
    }
    return true;
}

long long genus_degree(long long d) {
    if (d < 1) throw DomainError("degree must be positive");
    return (d - 1) * (d - 2) / 2;
}

long long genus_of(const RatPolygon& p) { return static_cast<long long>(interior_lattice_points(p).size()); }

bool is_fan(const TropicalCurve& curve) {
    if (curve.vertices.size() != 1) return false;
    return std::all_of(curve.edges.begin(), curve.edges.end(), [](const CurveEdge& e) { return e.is_ray() && e.from == 0; });
}

std::vector<std::pair<Vec2, long long>> fan_rays(const TropicalCurve& fan) {
    if (!is_fan(fan)) throw DomainError("curve is not a fan");
    std::map<Vec2, long long> merged;
    for (const auto& e : fan.edges) merged[e.direction] += e.multiplicity;
    return {merged.begin(), merged.end()};
}

bool fan_equal(const TropicalCurve& a, const TropicalCurve& b) { return fan_rays(a) == fan_rays(b); }

TropicalCurve transform_curve(const TropicalCurve& curve, const UnimodularMap& exponent_map) {
    UnimodularMap dual = exponent_map.dual();
    TropicalCurve out = curve;
    for (auto& v : out.vertices) v = dual.apply_linear(v);
    for (auto& e : out.edges) {
        e.direction = dual.apply_linear(e.direction);
        if (e.end) e.end = dual.apply_linear(*e.end);
    }
    return out;
}

bool is_smooth(const TropicalPolynomial& phi) {
    if (phi.terms().size() < 2) return true;
    Int denom = exponent_denominator(phi);
    std::vector<Vec2> exps;
    for (const auto& t : phi.terms()) exps.push_back(t.exponent);
    if (convex_hull(exps).degenerate()) {
        auto curve = collinear_locus(phi, denom);
        for (const auto& e : curve.edges)
            if (e.multiplicity != 1) return false;
        return true;
    }
    Rat scale = Rat(denom) * Rat(denom);
    for (const auto& cell : regular_subdivision(phi))
        if (cell.polygon.size() != 3 || cell.polygon.area() * scale != Rat(1, 2)) return false;
    return true;
}

}  // namespace tropdimer
