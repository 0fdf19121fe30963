#include "tropdimer/almost_toric.hpp"
#include "tropdimer/errors.hpp"

#include <algorithm>
#include <set>

namespace tropdimer {

bool BaseDiagram::affine_circle() const {
    return boundary && !traded.empty() && std::all_of(traded.begin(), traded.end(), [](bool b) { return b; });
}

int BaseDiagram::node_at_corner(int corner) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].corner == corner) return static_cast<int>(i);
    return -1;
}

UnimodularMap cut_monodromy(const Vec2& e, long long k) {
    long long ex = to_ll(e.x), ey = to_ll(e.y);
    return UnimodularMap::linear(1 - k * ex * ey, k * ex * ex, -k * ey * ey, 1 + k * ex * ey);
}

namespace {

struct Corner {
    Vec2 point, u, v;  // u towards the next vertex, v towards the previous one
};

Corner corner_of(const RatPolygon& p, int i) {
    Vec2 u = primitive_direction(p.vertex(i + 1) - p.vertex(i));
    Vec2 v = primitive_direction(p.vertex(i - 1) - p.vertex(i));
    Rat det = cross(u, v);
    if (det != 1 && det != -1) throw DomainError("corner " + p.vertex(i).str() + " is not Delzant");
    return {p.vertex(i), u, v};
}

// Parameter t >= 0 with p = origin + t * dir, if any.
std::optional<Rat> ray_parameter(const Vec2& p, const Vec2& origin, const Vec2& dir) {
    Vec2 d = p - origin;
    if (cross(d, dir) != 0) return std::nullopt;
    Rat t = dot(d, dir) / dot(dir, dir);
    if (t < 0) return std::nullopt;
    return t;
}

int cut_through(const BaseDiagram& d, const Vec2& p) {
    for (std::size_t i = 0; i < d.cuts.size(); ++i) {
        const Node& n = d.nodes[d.cuts[i].node];
        auto t = ray_parameter(p, n.position, d.cuts[i].direction);
        if (t && *t > 0) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

BaseDiagram toric_diagram(const RatPolygon& delzant) {
    if (delzant.degenerate()) throw DomainError("moment polygon is degenerate");
    for (std::size_t i = 0; i < delzant.size(); ++i) corner_of(delzant, static_cast<int>(i));
    BaseDiagram d;
    d.boundary = delzant;
    d.traded.assign(delzant.size(), false);
    return d;
}

BaseDiagram nodal_trade(const BaseDiagram& diagram, int corner, const Rat& depth) {
    if (!diagram.boundary) throw DomainError("diagram has no boundary polygon");
    const RatPolygon& p = *diagram.boundary;
    if (corner < 0 || static_cast<std::size_t>(corner) >= p.size()) throw DomainError("no corner " + std::to_string(corner));
    if (diagram.traded[corner]) throw DomainError("corner " + std::to_string(corner) + " is already traded");
    if (depth <= 0) throw DomainError("trade depth must be positive");
    Corner c = corner_of(p, corner);
    Node n;
    n.eigenray = primitive_direction(c.u + c.v);
    n.position = c.point + n.eigenray * depth;
    n.corner = corner;
    n.depth = depth;
    if (!p.contains_interior(n.position)) throw DomainError("node " + n.position.str() + " leaves the polygon");
    BaseDiagram out = diagram;
    out.traded[corner] = true;
    out.nodes.push_back(n);
    out.cuts.push_back({static_cast<int>(out.nodes.size()) - 1, -n.eigenray, cut_monodromy(n.eigenray, n.multiplicity)});
    return out;
}

BaseDiagram trade_all(const RatPolygon& delzant, const Rat& depth) {
    BaseDiagram d = toric_diagram(delzant);
    for (std::size_t i = 0; i < delzant.size(); ++i) d = nodal_trade(d, static_cast<int>(i), depth);
    return d;
}

int CurveOnBase::attachment_of(int node) const {
    for (const auto& [e, n] : attachments)
        if (n == node) return e;
    return -1;
}

bool balanced_on_base(const CurveOnBase& c, const BaseDiagram& d) {
    const TropicalCurve& cv = c.curve;
    for (std::size_t v = 0; v < cv.vertices.size(); ++v) {
        int cut = cut_through(d, cv.vertices[v]);
        Vec2 sum(0, 0);
        for (const auto& [leg, m] : cv.outgoing(static_cast<int>(v))) {
            Vec2 w = leg;
            if (cut >= 0 && cross(d.cuts[cut].direction, leg) > 0) w = d.cuts[cut].transition.apply_linear(leg);
            sum += w * Rat(m);
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

bool admissible(const CurveOnBase& c, const BaseDiagram& d) {
    const TropicalCurve& cv = c.curve;
    std::set<std::pair<int, int>> attached(c.attachments.begin(), c.attachments.end());
    std::set<int> attached_edges;
    for (const auto& [e, n] : c.attachments) {
        if (e < 0 || static_cast<std::size_t>(e) >= cv.edges.size()) return false;
        if (n < 0 || static_cast<std::size_t>(n) >= d.nodes.size()) return false;
        const CurveEdge& ce = cv.edges[e];
        if (!ce.is_leaf() || *ce.end != d.nodes[n].position) return false;
        if (!parallel(*ce.end - cv.vertices[ce.from], d.nodes[n].eigenray)) return false;
        attached_edges.insert(e);
    }
    for (std::size_t e = 0; e < cv.edges.size(); ++e) {
        const CurveEdge& ce = cv.edges[e];
        Vec2 a = cv.vertices[ce.from];
        std::optional<Vec2> b;
        if (ce.to >= 0) b = cv.vertices[ce.to];
        else if (ce.end) b = *ce.end;
        Vec2 dir = b ? *b - a : ce.direction;
        for (std::size_t n = 0; n < d.nodes.size(); ++n) {
            const Vec2& q = d.nodes[n].position;
            bool at_end = q == a || (b && q == *b);
            bool inside;
            if (b) {
                inside = point_on_segment(q, a, *b) && !at_end;
            } else {
                auto t = ray_parameter(q, a, dir);
                inside = t && *t > 0;
            }
            if (!at_end && !inside) continue;
            if (!parallel(dir, d.nodes[n].eigenray)) return false;
            if (at_end && !attached.count({static_cast<int>(e), static_cast<int>(n)})) return false;
            if (inside && !attached_edges.count(static_cast<int>(e))) return false;
        }
        if (d.boundary && ce.is_ray()) return false;
    }
    if (d.boundary)
        for (const auto& v : cv.vertices)
            if (!d.boundary->contains_interior(v)) return false;
    return true;
}

namespace {

// Closed curve parallel to the boundary, one vertex per corner at corner + t * eigenray.
CurveOnBase collar_curve(const BaseDiagram& d, const Rat& t) {
    const RatPolygon& p = *d.boundary;
    int n = static_cast<int>(p.size());
    CurveOnBase out;
    for (int i = 0; i < n; ++i) {
        Corner c = corner_of(p, i);
        out.curve.add_vertex(c.point + primitive_direction(c.u + c.v) * t);
    }
    for (int i = 0; i < n; ++i) {
        Corner c = corner_of(p, i);
        Vec2 step = out.curve.vertices[(i + 1) % n] - out.curve.vertices[i];
        if (step.is_zero() || cross(step, c.u) != 0 || dot(step, c.u) <= 0) throw DomainError("inconsistent placement");
        out.curve.add_segment(i, (i + 1) % n);
    }
    return out;
}

void require_traded(const BaseDiagram& d) {
    if (!d.affine_circle()) throw DomainError("diagram must have every corner traded");
}

}  // namespace

CurveOnBase build_outer_torus(const BaseDiagram& d, const Rat& r) {
    require_traded(d);
    if (r <= 0) throw DomainError("collar distance must be positive");
    for (const auto& n : d.nodes)
        if (n.corner >= 0 && r >= n.depth) throw DomainError("collar distance reaches the node at " + n.position.str());
    return collar_curve(d, r);
}

CurveOnBase build_inner_torus(const BaseDiagram& d, std::optional<Rat> t) {
    require_traded(d);
    Rat deepest = 0;
    for (const auto& n : d.nodes) deepest = std::max(deepest, n.depth);
    Rat dist = t ? *t : deepest + 1;
    for (const auto& n : d.nodes)
        if (dist <= n.depth) throw DomainError("inner vertices must lie beyond every node");
    CurveOnBase out = collar_curve(d, dist);
    for (std::size_t i = 0; i < d.boundary->size(); ++i) {
        int node = d.node_at_corner(static_cast<int>(i));
        out.curve.add_leaf(static_cast<int>(i), d.nodes[node].position);
        out.attachments.push_back({static_cast<int>(out.curve.edges.size()) - 1, node});
    }
    return out;
}

namespace {

void move_vertex(TropicalCurve& c, int v, const Vec2& to) {
    c.vertices[v] = to;
    for (auto& e : c.edges) {
        if (e.from != v && e.to != v) continue;
        if (e.to >= 0) e.direction = primitive_direction(c.vertices[e.to] - c.vertices[e.from]);
        else if (e.end) e.direction = primitive_direction(*e.end - c.vertices[e.from]);
    }
}

}  // namespace

CurveOnBase nodal_trade_exchange(const CurveOnBase& c, const BaseDiagram& d, int node, ExchangeDirection dir,
                                 std::optional<Rat> distance) {
    return nodal_trade_exchange(c, d, std::vector<int>{node}, dir, distance);
}

CurveOnBase nodal_trade_exchange(const CurveOnBase& c, const BaseDiagram& d, const std::vector<int>& nodes,
                                 ExchangeDirection dir, std::optional<Rat> distance) {
    if (distance && *distance <= 0) throw DomainError("exchange distance must be positive");
    struct Move {
        int node, vertex, leaf;  // leaf >= 0: remove it; otherwise add one
        long long mult;
        Vec2 target;
    };
    std::vector<Move> moves;
    std::set<int> used_vertices;
    const TropicalCurve& cv = c.curve;
    for (int node : nodes) {
        if (node < 0 || static_cast<std::size_t>(node) >= d.nodes.size()) throw DomainError("no node " + std::to_string(node));
        for (const auto& m : moves)
            if (m.node == node) throw DomainError("node " + std::to_string(node) + " listed twice");
        const Node& n = d.nodes[node];
        int leaf = c.attachment_of(node);
        ExchangeDirection way = dir;
        if (way == ExchangeDirection::Auto) way = leaf >= 0 ? ExchangeDirection::Inverse : ExchangeDirection::Forward;
        if (way == ExchangeDirection::Inverse) {
            if (leaf < 0) throw DomainError("no leg is attached to node " + std::to_string(node));
            int v = cv.edges[leaf].from;
            auto t = ray_parameter(cv.vertices[v], n.position, n.eigenray);
            if (!t || *t == 0) throw DomainError("attached vertex is not on the eigenray of node " + std::to_string(node));
            moves.push_back({node, v, leaf, 0, n.position - n.eigenray * (distance ? *distance : *t)});
            used_vertices.insert(v);
            continue;
        }
        if (leaf >= 0) throw DomainError("node " + std::to_string(node) + " already carries a leg");
        bool found = false;
        for (std::size_t v = 0; v < cv.vertices.size() && !found; ++v) {
            if (used_vertices.count(static_cast<int>(v))) continue;
            auto t = ray_parameter(cv.vertices[v], n.position, -n.eigenray);
            if (!t || *t == 0) continue;
            auto legs = cv.outgoing(static_cast<int>(v));
            if (legs.size() != 2) continue;
            Vec2 sum = legs[0].first * Rat(legs[0].second) + legs[1].first * Rat(legs[1].second);
            if (sum.is_zero() || cross(sum, n.eigenray) != 0 || dot(sum, n.eigenray) <= 0) continue;
            Rat m = dot(sum, n.eigenray) / dot(n.eigenray, n.eigenray);
            if (!is_integer(m)) continue;
            moves.push_back({node, static_cast<int>(v), -1, to_ll(m), n.position + n.eigenray * (distance ? *distance : *t)});
            used_vertices.insert(static_cast<int>(v));
            found = true;
        }
        if (!found)
            throw DomainError("no edge crossing the cut of node " + std::to_string(node) + " is parallel to its eigenray");
    }

    CurveOnBase out = c;
    for (const auto& m : moves) move_vertex(out.curve, m.vertex, m.target);
    std::vector<int> removed;
    for (const auto& m : moves)
        if (m.leaf >= 0) removed.push_back(m.leaf);
    std::sort(removed.rbegin(), removed.rend());
    for (int leaf : removed) {
        out.curve.edges.erase(out.curve.edges.begin() + leaf);
        std::vector<std::pair<int, int>> kept;
        for (auto [e, n] : out.attachments) {
            if (e == leaf) continue;
            kept.push_back({e > leaf ? e - 1 : e, n});
        }
        out.attachments = kept;
    }
    for (const auto& m : moves) {
        if (m.leaf >= 0) continue;
        out.curve.add_leaf(m.vertex, d.nodes[m.node].position, m.mult);
        out.attachments.push_back({static_cast<int>(out.curve.edges.size()) - 1, m.node});
    }
    return out;
}

std::vector<std::string> curve_signature(const CurveOnBase& c) {
    const TropicalCurve& cv = c.curve;
    std::vector<std::string> out;
    for (const auto& v : cv.vertices) out.push_back("vertex " + v.str());
    for (std::size_t i = 0; i < cv.edges.size(); ++i) {
        const CurveEdge& e = cv.edges[i];
        std::string m = " x" + std::to_string(e.multiplicity);
        Vec2 a = cv.vertices[e.from];
        if (e.to >= 0) {
            Vec2 b = cv.vertices[e.to];
            if (b < a) std::swap(a, b);
            out.push_back("segment " + a.str() + " " + b.str() + m);
        } else if (e.end) {
            std::string s = "leaf " + a.str() + " " + e.end->str() + m;
            for (const auto& [ae, n] : c.attachments)
                if (ae == static_cast<int>(i)) s += " node " + std::to_string(n);
            out.push_back(s);
        } else {
            out.push_back("ray " + a.str() + " " + e.direction.str() + m);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool same_curve(const CurveOnBase& a, const CurveOnBase& b) { return curve_signature(a) == curve_signature(b); }

BaseDiagram local_model_diagram() {
    BaseDiagram d;
    Node n;
    n.position = Vec2(0, 0);
    n.eigenray = Vec2(1, 1);
    d.nodes.push_back(n);
    d.cuts.push_back({0, Vec2(-1, -1), cut_monodromy(n.eigenray, 1)});
    return d;
}

CurveOnBase local_line_curve() {
    CurveOnBase c;
    int v = c.curve.add_vertex(Vec2(-1, -1));
    c.curve.add_ray(v, Vec2(1, 0));
    c.curve.add_ray(v, Vec2(0, 1));
    return c;
}

CurveOnBase local_pants_curve() {
    CurveOnBase c;
    int v = c.curve.add_vertex(Vec2(1, 1));
    c.curve.add_ray(v, Vec2(1, 0));
    c.curve.add_ray(v, Vec2(0, 1));
    c.curve.add_leaf(v, Vec2(0, 0));
    c.attachments.push_back({2, 0});
    return c;
}

AnChain an_chain_curve(int n) {
    if (n < 1) throw DomainError("chain length must be positive");
    AnChain out;
    for (int k = 1; k <= n; ++k) {
        Node node;
        node.position = Vec2(-k, -k);
        node.eigenray = Vec2(1, 1);
        out.diagram.nodes.push_back(node);
        out.diagram.cuts.push_back({k - 1, Vec2(-1, -1), cut_monodromy(node.eigenray, 1)});
    }
    TropicalCurve& c = out.curve.curve;
    int o = c.add_vertex(Vec2(0, 0));
    c.add_ray(o, Vec2(n - 1, n));
    c.add_ray(o, Vec2(1, 0));
    for (int k = 1; k <= n; ++k) {
        c.add_leaf(o, Vec2(-k, -k));
        out.curve.attachments.push_back({static_cast<int>(c.edges.size()) - 1, k - 1});
    }
    return out;
}

}  // namespace tropdimer
