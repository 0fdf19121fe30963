#include "tropdimer/lattice_geom.hpp"
#include "tropdimer/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tropdimer {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Rat floor(const Rat& r) { return Rat(floor_div(num(r), den(r))); }
Rat frac(const Rat& r) { return r - floor(r); }
bool is_integer(const Rat& r) { return den(r) == 1; }

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd(a, b);
    Int r = a / g * b;
    return r < 0 ? Int(-r) : r;
}

long long to_ll(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) || v < Int(std::numeric_limits<long long>::min()))
        throw DomainError("integer overflow");
    return v.convert_to<long long>();
}

long long to_ll(const Rat& r) {
    if (!is_integer(r)) throw DomainError("expected an integer, got " + to_string(r));
    return to_ll(num(r));
}

std::string to_string(const Rat& r) { return r.str(); }
std::string to_string(const Int& v) { return v.str(); }

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int d(text.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rat(Int(text.substr(0, slash)), d);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

bool Vec2::is_integral() const { return is_integer(x) && is_integer(y); }

std::string Vec2::str() const { return "(" + to_string(x) + "," + to_string(y) + ")"; }

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << v.str(); }

Int common_denominator(const Vec2& v) { return lcm(den(v.x), den(v.y)); }

Vec2 primitive_direction(const Vec2& v) {
    if (v.is_zero()) throw DomainError("zero vector has no direction");
    Int d = common_denominator(v);
    Int a = num(v.x * d), b = num(v.y * d);
    Int g = gcd(a, b);
    return {Rat(a / g), Rat(b / g)};
}

Int lattice_length(const Vec2& v, const Int& n) {
    Vec2 w = v * Rat(n);
    if (!w.is_integral()) throw DomainError("vector " + v.str() + " is not in the 1/" + n.str() + " lattice");
    return gcd(num(w.x), num(w.y));
}

bool parallel(const Vec2& a, const Vec2& b) { return cross(a, b) == 0; }

namespace {
int half_of(const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }
}  // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

TorusPoint reduce_mod_lattice(const Vec2& p) { return {Vec2(frac(p.x), frac(p.y))}; }

bool congruent_mod_lattice(const Vec2& a, const Vec2& b) { return (a - b).is_integral(); }

std::string H1Class::str() const { return "<" + std::to_string(a) + "," + std::to_string(b) + ">"; }

H1Class to_class(const Vec2& v) {
    if (!v.is_integral()) throw DomainError("non-integral homology vector " + v.str());
    return {to_ll(v.x), to_ll(v.y)};
}

Vec2 to_vec(const H1Class& c) { return {c.a, c.b}; }

long long signed_intersection(const H1Class& c1, const H1Class& c2) { return c1.a * c2.b - c2.a * c1.b; }

long long intersection_number(const H1Class& c1, const H1Class& c2) {
    long long v = signed_intersection(c1, c2);
    return v < 0 ? -v : v;
}

RatPolygon RatPolygon::from_vertices(std::vector<Vec2> vs) {
    if (vs.empty()) throw DomainError("empty point set");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) throw DomainError("repeated polygon vertex " + vs[i].str());
    if (vs.size() >= 3) {
        Rat area2 = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) area2 += cross(vs[i], vs[(i + 1) % vs.size()]);
        if (area2 < 0) std::reverse(vs.begin(), vs.end());
        std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = vs[i];
            const Vec2& b = vs[(i + 1) % n];
            const Vec2& c = vs[(i + 2) % n];
            if (cross(b - a, c - b) <= 0) throw DomainError("polygon is not strictly convex at " + b.str());
        }
        // Simple strictly convex polygons turn by exactly one full rotation.
        int descents = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 e1 = vs[(i + 1) % n] - vs[i];
            Vec2 e2 = vs[(i + 2) % n] - vs[(i + 1) % n];
            if (angle_less(e2, e1)) ++descents;
        }
        if (descents != 1) throw DomainError("polygon winds more than once");
    } else if (vs.size() == 2 && vs[1] < vs[0]) {
        std::swap(vs[0], vs[1]);
    }
    auto it = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), it, vs.end());
    RatPolygon p;
    p.vertices_ = std::move(vs);
    return p;
}

const Vec2& RatPolygon::vertex(long long i) const {
    long long n = static_cast<long long>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Rat RatPolygon::area() const {
    Rat a2 = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) a2 += cross(vertices_[i], vertex(static_cast<long long>(i) + 1));
    return a2 / 2;
}

Vec2 RatPolygon::centroid() const {
    Vec2 s(0, 0);
    for (const auto& v : vertices_) s += v;
    return s / Rat(static_cast<long long>(vertices_.size()));
}

std::vector<Segment> RatPolygon::edges() const {
    std::vector<Segment> out;
    if (vertices_.size() < 2) return out;
    if (vertices_.size() == 2) return {{vertices_[0], vertices_[1]}};
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back({vertices_[i], vertex(static_cast<long long>(i) + 1)});
    return out;
}

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (cross(b - a, p - a) != 0) return false;
    return dot(p - a, p - b) <= 0;
}

bool RatPolygon::contains(const Vec2& p) const {
    if (vertices_.empty()) return false;
    if (vertices_.size() == 1) return p == vertices_[0];
    if (vertices_.size() == 2) return point_on_segment(p, vertices_[0], vertices_[1]);
    for (const auto& e : edges())
        if (cross(e.b - e.a, p - e.a) < 0) return false;
    return true;
}

bool RatPolygon::contains_interior(const Vec2& p) const {
    if (vertices_.size() < 3) return false;
    for (const auto& e : edges())
        if (cross(e.b - e.a, p - e.a) <= 0) return false;
    return true;
}

bool RatPolygon::on_boundary(const Vec2& p) const { return contains(p) && !contains_interior(p); }

int RatPolygon::index_of(const Vec2& p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == p) return static_cast<int>(i);
    return -1;
}

RatPolygon RatPolygon::translated(const Vec2& t) const {
    RatPolygon p = *this;
    for (auto& v : p.vertices_) v += t;
    return p;
}

bool RatPolygon::integral() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Vec2& v) { return v.is_integral(); });
}

RatPolygon convex_hull(const std::vector<Vec2>& points) {
    if (points.empty()) throw DomainError("empty point set");
    std::vector<Vec2> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return RatPolygon::from_vertices(pts);
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) {
        // collinear input: keep the two extremes
        return RatPolygon::from_vertices({pts.front(), pts.back()});
    }
    return RatPolygon::from_vertices(hull);
}

RatPolygon minkowski_sum(const RatPolygon& a, const RatPolygon& b) {
    if (a.size() == 0 || b.size() == 0) throw DomainError("empty polygon");
    if (a.degenerate() || b.degenerate()) {
        std::vector<Vec2> pts;
        for (const auto& v : a.vertices())
            for (const auto& w : b.vertices()) pts.push_back(v + w);
        return convex_hull(pts);
    }
    // merge the counterclockwise edge sequences starting at the lowest vertices
    auto lowest = [](const RatPolygon& p) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < p.size(); ++i)
            if (p[i].y < p[k].y || (p[i].y == p[k].y && p[i].x < p[k].x)) k = i;
        return static_cast<long long>(k);
    };
    long long ia = lowest(a), ib = lowest(b);
    long long na = static_cast<long long>(a.size()), nb = static_cast<long long>(b.size());
    std::vector<Vec2> out;
    long long i = 0, j = 0;
    while (i < na || j < nb) {
        out.push_back(a.vertex(ia + i) + b.vertex(ib + j));
        Vec2 ea = a.vertex(ia + i + 1) - a.vertex(ia + i), eb = b.vertex(ib + j + 1) - b.vertex(ib + j);
        Rat c = cross(ea, eb);
        if (j >= nb || (i < na && c > 0)) ++i;
        else if (i >= na || c < 0) ++j;
        else {
            ++i;
            ++j;
        }
    }
    return convex_hull(out);
}

RatPolygon clip_halfplane(const RatPolygon& poly, const Vec2& normal, const Rat& bound) {
    const auto& vs = poly.vertices();
    std::vector<Vec2> out;
    std::size_t n = vs.size();
    if (n == 0) return poly;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % n];
        Rat fa = dot(normal, a) - bound, fb = dot(normal, b) - bound;
        if (fa <= 0) out.push_back(a);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) out.push_back(a + (b - a) * (fa / (fa - fb)));
        if (n == 1) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) return RatPolygon{};
    return convex_hull(out);
}

RatPolygon intersect(const RatPolygon& a, const RatPolygon& b) {
    if (a.size() == 0 || b.size() == 0) return RatPolygon{};
    RatPolygon out = a;
    if (b.size() < 3) throw DomainError("intersect requires a 2-dimensional clipping polygon");
    for (const auto& e : b.edges()) {
        Vec2 n = {e.b.y - e.a.y, e.a.x - e.b.x};  // outward normal for CCW
        out = clip_halfplane(out, n, dot(n, e.a));
        if (out.size() == 0) break;
    }
    return out;
}

bool interiors_overlap(const RatPolygon& a, const RatPolygon& b) {
    if (a.degenerate() || b.degenerate()) return false;
    // separating axis test over the edge normals of both polygons
    auto separated = [&](const RatPolygon& p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            Vec2 n = rot90(p.vertex(static_cast<long long>(i) + 1) - p[i]);
            Rat amin = dot(n, a[0]), amax = amin, bmin = dot(n, b[0]), bmax = bmin;
            for (const auto& v : a.vertices()) {
                Rat t = dot(n, v);
                amin = std::min(amin, t);
                amax = std::max(amax, t);
            }
            for (const auto& v : b.vertices()) {
                Rat t = dot(n, v);
                bmin = std::min(bmin, t);
                bmax = std::max(bmax, t);
            }
            if (amax <= bmin || bmax <= amin) return true;
        }
        return false;
    };
    return !separated(a) && !separated(b);
}

std::vector<std::array<long long, 2>> interior_lattice_points(const RatPolygon& p) {
    if (!p.integral()) throw DomainError("lattice polygon required");
    std::vector<std::array<long long, 2>> out;
    if (p.degenerate()) return out;
    Rat x0 = p[0].x, x1 = p[0].x, y0 = p[0].y, y1 = p[0].y;
    for (const auto& v : p.vertices()) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    for (long long x = to_ll(x0); x <= to_ll(x1); ++x)
        for (long long y = to_ll(y0); y <= to_ll(y1); ++y)
            if (p.contains_interior(Vec2(x, y))) out.push_back({x, y});
    return out;
}

RatPolygon dilated_unit_triangle(long long d) {
    if (d < 1) throw DomainError("dilation factor must be positive");
    return RatPolygon::from_vertices({Vec2(0, 0), Vec2(d, 0), Vec2(0, d)});
}

UnimodularMap UnimodularMap::linear(long long a, long long b, long long c, long long d) {
    UnimodularMap u;
    u.m = {{{a, b}, {c, d}}};
    if (u.det() != 1 && u.det() != -1) throw DomainError("matrix is not unimodular");
    return u;
}

Vec2 UnimodularMap::apply_linear(const Vec2& v) const {
    return {Rat(m[0][0]) * v.x + Rat(m[0][1]) * v.y, Rat(m[1][0]) * v.x + Rat(m[1][1]) * v.y};
}

Vec2 UnimodularMap::apply(const Vec2& p) const { return apply_linear(p) + t; }

H1Class UnimodularMap::apply(const H1Class& c) const {
    return {m[0][0] * c.a + m[0][1] * c.b, m[1][0] * c.a + m[1][1] * c.b};
}

UnimodularMap UnimodularMap::inverse() const {
    long long d = det();
    UnimodularMap u;
    u.m = {{{m[1][1] * d, -m[0][1] * d}, {-m[1][0] * d, m[0][0] * d}}};
    u.t = -u.apply_linear(t);
    return u;
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
    UnimodularMap u;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u.m[i][j] = m[i][0] * inner.m[0][j] + m[i][1] * inner.m[1][j];
    u.t = apply_linear(inner.t) + t;
    return u;
}

UnimodularMap UnimodularMap::dual() const {
    UnimodularMap inv = inverse();
    UnimodularMap u;
    u.m = {{{inv.m[0][0], inv.m[1][0]}, {inv.m[0][1], inv.m[1][1]}}};
    return u;
}

}  // namespace tropdimer
