#include "tropdimer/dimer.hpp"
#include "tropdimer/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace tropdimer {

std::vector<int> DualDimer::indices_of(Color c) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < polytopes.size(); ++i)
        if (polytopes[i].color == c) out.push_back(static_cast<int>(i));
    return out;
}

DualDimer DualDimer::transformed(const UnimodularMap& map) const {
    DualDimer out;
    out.denominator = denominator;
    for (const auto& p : polytopes) {
        std::vector<Vec2> vs;
        for (const auto& v : p.polygon.vertices()) vs.push_back(map.apply(v));
        out.polytopes.push_back({p.color, RatPolygon::from_vertices(vs)});
    }
    return out;
}

bool ValidationReport::ok() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& a) { return a.passed; });
}

const AxiomCheck& ValidationReport::axiom(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return a;
    throw DomainError("unknown axiom " + name);
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    for (const auto& a : axioms) {
        os << a.name << ": " << (a.passed ? "pass" : "FAIL");
        for (const auto& o : a.offenders) os << "\n  " << o;
        os << "\n";
    }
    os << "self-intersections: " << (self_intersecting ? "yes" : "no") << "\n";
    for (const auto& o : overlaps) os << "  " << o << "\n";
    return os.str();
}

namespace {

std::string poly_label(const DualDimer& d, int i) {
    return (d.polytopes[i].color == Color::White ? "white#" : "black#") + std::to_string(i);
}

struct VertexRef {
    int polytope;
    int vertex;
};

std::map<TorusPoint, std::vector<VertexRef>> vertex_table(const DualDimer& d, Color c) {
    std::map<TorusPoint, std::vector<VertexRef>> table;
    for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
        if (d.polytopes[i].color != c) continue;
        const auto& vs = d.polytopes[i].polygon.vertices();
        for (std::size_t k = 0; k < vs.size(); ++k)
            table[reduce_mod_lattice(vs[k])].push_back({static_cast<int>(i), static_cast<int>(k)});
    }
    return table;
}

std::set<Vec2> germ(const RatPolygon& p, int k) {
    return {primitive_direction(p.vertex(k + 1) - p.vertex(k)), primitive_direction(p.vertex(k - 1) - p.vertex(k))};
}

// Closed y-range of a convex polygon on the vertical line at x; empty when lo > hi.
std::pair<Rat, Rat> vertical_span(const RatPolygon& p, const Rat& x) {
    Rat lo = 1, hi = 0;
    bool any = false;
    auto take = [&](const Rat& y) {
        if (!any || y < lo) lo = y;
        if (!any || y > hi) hi = y;
        any = true;
    };
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2& a = p[i];
        const Vec2& b = p.vertex(static_cast<long long>(i) + 1);
        if (a.x == x) take(a.y);
        if ((a.x < x && x < b.x) || (b.x < x && x < a.x)) take(a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x));
    }
    if (!any) return {Rat(1), Rat(0)};
    return {lo, hi};
}

using IPt = std::array<long long, 2>;

long long icross(const IPt& o, const IPt& a, const IPt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// a - b for counterclockwise convex integer polygons, counterclockwise, collinear points dropped.
std::vector<IPt> int_difference(const std::vector<IPt>& a, const std::vector<IPt>& b) {
    std::vector<IPt> nb;
    for (const auto& w : b) nb.push_back({-w[0], -w[1]});
    auto lowest = [](const std::vector<IPt>& p) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < p.size(); ++i)
            if (p[i][1] < p[k][1] || (p[i][1] == p[k][1] && p[i][0] < p[k][0])) k = i;
        return k;
    };
    std::size_t na = a.size(), nn = nb.size(), ia = lowest(a), ib = lowest(nb), i = 0, j = 0;
    std::vector<IPt> out;
    while (i < na || j < nn) {
        const IPt& p = a[(ia + i) % na];
        const IPt& q = nb[(ib + j) % nn];
        IPt cur{p[0] + q[0], p[1] + q[1]};
        while (out.size() >= 2 && icross(out[out.size() - 2], out.back(), cur) == 0) out.pop_back();
        out.push_back(cur);
        const IPt& p1 = a[(ia + i + 1) % na];
        const IPt& q1 = nb[(ib + j + 1) % nn];
        long long c = (p1[0] - p[0]) * (q1[1] - q[1]) - (p1[1] - p[1]) * (q1[0] - q[0]);
        if (j >= nn || (i < na && c > 0)) ++i;
        else if (i >= na || c < 0) ++j;
        else {
            ++i;
            ++j;
        }
    }
    while (out.size() >= 3 && icross(out[out.size() - 2], out.back(), out.front()) == 0) out.pop_back();
    while (out.size() >= 3 && icross(out.back(), out[0], out[1]) == 0) out.erase(out.begin());
    return out;
}

long long floor_div(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

}  // namespace

ValidationReport validate(const DualDimer& d) {
    ValidationReport rep;
    AxiomCheck nonempty{"nonempty", true, {}}, nondeg{"nondegenerate", true, {}}, denom{"denominator", true, {}};
    AxiomCheck distinct{"distinct-vertices", true, {}}, matching{"vertex-matching", true, {}}, germs{"opposite-germs", true, {}};
    if (d.indices_of(Color::White).empty() || d.indices_of(Color::Black).empty()) {
        nonempty.passed = false;
        nonempty.offenders.push_back("both colors must be present");
    }
    if (d.denominator < 1) {
        denom.passed = false;
        denom.offenders.push_back("denominator must be positive");
    }
    for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
        const auto& p = d.polytopes[i].polygon;
        if (p.degenerate()) {
            nondeg.passed = false;
            nondeg.offenders.push_back(poly_label(d, static_cast<int>(i)) + " is degenerate");
        }
        if (d.denominator >= 1)
            for (const auto& v : p.vertices())
                if (!(v * Rat(d.denominator)).is_integral()) {
                    denom.passed = false;
                    denom.offenders.push_back(poly_label(d, static_cast<int>(i)) + " vertex " + v.str());
                }
    }
    auto whites = vertex_table(d, Color::White);
    auto blacks = vertex_table(d, Color::Black);
    for (const auto* table : {&whites, &blacks})
        for (const auto& [pt, refs] : *table)
            if (refs.size() > 1) {
                distinct.passed = false;
                distinct.offenders.push_back("torus point " + pt.coords.str() + " repeated " + std::to_string(refs.size()) + " times");
            }
    for (const auto& [pt, refs] : whites)
        if (!blacks.count(pt)) {
            matching.passed = false;
            matching.offenders.push_back("white vertex " + pt.coords.str() + " has no black partner");
        }
    for (const auto& [pt, refs] : blacks)
        if (!whites.count(pt)) {
            matching.passed = false;
            matching.offenders.push_back("black vertex " + pt.coords.str() + " has no white partner");
        }
    if (nondeg.passed) {
        for (const auto& [pt, wrefs] : whites) {
            auto it = blacks.find(pt);
            if (it == blacks.end()) continue;
            auto wg = germ(d.polytopes[wrefs[0].polytope].polygon, wrefs[0].vertex);
            auto bg = germ(d.polytopes[it->second[0].polytope].polygon, it->second[0].vertex);
            std::set<Vec2> neg;
            for (const auto& v : bg) neg.insert(-v);
            if (wg != neg) {
                germs.passed = false;
                germs.offenders.push_back("edge germs at " + pt.coords.str() + " are not opposite");
            }
        }
    }
    rep.axioms = {nonempty, nondeg, denom, distinct, matching, germs};

    // integer coordinates in the (1/N) grid when they are small enough
    std::vector<std::vector<IPt>> scaled;
    if (nondeg.passed && denom.passed) {
        const Rat bound(1LL << 24);
        for (const auto& p : d.polytopes) {
            std::vector<IPt> pts;
            for (const auto& v : p.polygon.vertices()) {
                Vec2 s = v * Rat(d.denominator);
                if (abs(s.x) > bound || abs(s.y) > bound) break;
                pts.push_back({to_ll(s.x), to_ll(s.y)});
            }
            if (pts.size() != p.polygon.size()) {
                scaled.clear();
                break;
            }
            scaled.push_back(std::move(pts));
        }
    }
    auto record = [&](std::size_t i, std::size_t j, long long kx, long long ky) {
        rep.self_intersecting = true;
        rep.overlaps.push_back(poly_label(d, static_cast<int>(i)) + " overlaps " + poly_label(d, static_cast<int>(j)) +
                               " shifted by " + Vec2(kx, ky).str());
    };
    if (!scaled.empty()) {
        const long long n = d.denominator;
        for (std::size_t i = 0; i < scaled.size(); ++i)
            for (std::size_t j = i; j < scaled.size(); ++j) {
                // a meets b + k in an open set iff N k lies inside the difference polygon
                std::vector<IPt> m = int_difference(scaled[i], scaled[j]);
                long long x0 = m[0][0], x1 = x0, y0 = m[0][1], y1 = y0;
                for (const auto& v : m) {
                    x0 = std::min(x0, v[0]);
                    x1 = std::max(x1, v[0]);
                    y0 = std::min(y0, v[1]);
                    y1 = std::max(y1, v[1]);
                }
                if (x1 - x0 > 256 * n || y1 - y0 > 256 * n) throw DomainError("polytopes too far apart for the overlap check");
                for (long long kx = floor_div(x0, n); kx <= floor_div(x1, n); ++kx)
                    for (long long ky = floor_div(y0, n); ky <= floor_div(y1, n); ++ky) {
                        if (i == j && kx == 0 && ky == 0) continue;
                        IPt p{kx * n, ky * n};
                        bool inside = m.size() >= 3;
                        for (std::size_t e = 0; inside && e < m.size(); ++e)
                            inside = icross(m[e], m[(e + 1) % m.size()], p) > 0;
                        if (inside) record(i, j, kx, ky);
                    }
            }
    } else if (nondeg.passed) {
        for (std::size_t i = 0; i < d.polytopes.size(); ++i)
            for (std::size_t j = i; j < d.polytopes.size(); ++j) {
                const auto& a = d.polytopes[i].polygon;
                const auto& b = d.polytopes[j].polygon;
                // a meets b + k in an open set iff k lies inside the difference polygon a - b
                std::vector<Vec2> neg;
                for (const auto& w : b.vertices()) neg.push_back(-w);
                RatPolygon m = minkowski_sum(a, RatPolygon::from_vertices(neg));
                Rat x0 = m[0].x, x1 = m[0].x, y0 = m[0].y, y1 = m[0].y;
                for (const auto& v : m.vertices()) {
                    x0 = std::min(x0, v.x);
                    x1 = std::max(x1, v.x);
                    y0 = std::min(y0, v.y);
                    y1 = std::max(y1, v.y);
                }
                if (x1 - x0 > 256 || y1 - y0 > 256) throw DomainError("polytopes too far apart for the overlap check");
                for (long long kx = to_ll(floor(x0)); kx <= to_ll(floor(x1)); ++kx) {
                    auto [lo, hi] = vertical_span(m, Rat(kx));
                    if (lo > hi) continue;
                    for (long long ky = to_ll(floor(lo)); ky <= to_ll(floor(hi)); ++ky) {
                        if (i == j && kx == 0 && ky == 0) continue;
                        if (m.contains_interior(Vec2(kx, ky))) record(i, j, kx, ky);
                    }
                }
            }
    }
    return rep;
}

void require_valid(const DualDimer& d) {
    auto rep = validate(d);
    if (!rep.ok()) throw DomainError("dimer axioms fail:\n" + rep.str());
}

int DimerGraph::edge_at(int white, int white_vertex) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].white == white && edges[i].white_vertex == white_vertex) return static_cast<int>(i);
    return -1;
}

int DimerGraph::edge_at_black(int black, int black_vertex) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].black == black && edges[i].black_vertex == black_vertex) return static_cast<int>(i);
    return -1;
}

DimerGraph build_graph(const DualDimer& d) {
    DimerGraph g;
    g.whites = d.indices_of(Color::White);
    g.blacks = d.indices_of(Color::Black);
    std::map<TorusPoint, std::pair<int, int>> black_at;  // torus point -> (black index, vertex)
    for (std::size_t j = 0; j < g.blacks.size(); ++j) {
        const auto& p = d.polytopes[g.blacks[j]].polygon;
        for (std::size_t k = 0; k < p.size(); ++k) black_at[reduce_mod_lattice(p[k])] = {static_cast<int>(j), static_cast<int>(k)};
    }
    for (std::size_t i = 0; i < g.whites.size(); ++i) {
        const auto& wp = d.polytopes[g.whites[i]].polygon;
        for (std::size_t k = 0; k < wp.size(); ++k) {
            auto t = reduce_mod_lattice(wp[k]);
            auto it = black_at.find(t);
            if (it == black_at.end()) throw DomainError("unmatched white vertex " + t.coords.str());
            const auto& bp = d.polytopes[g.blacks[it->second.first]].polygon;
            DimerEdge e;
            e.white = static_cast<int>(i);
            e.black = it->second.first;
            e.white_vertex = static_cast<int>(k);
            e.black_vertex = it->second.second;
            e.anchor = t;
            e.white_lift = wp[k];
            e.black_lift = bp[e.black_vertex];
            e.displacement = (wp.centroid() - e.white_lift) + (e.black_lift - bp.centroid());
            g.edges.push_back(e);
        }
    }
    return g;
}

std::string edge_id(const DualDimer& d, const DimerEdge& e) {
    Vec2 a = e.anchor.coords * Rat(d.denominator);
    return "w" + std::to_string(e.white) + "-b" + std::to_string(e.black) + "@" + to_string(a.x) + "," + to_string(a.y);
}

std::vector<ZigzagPath> zigzag_paths(const DualDimer& d) {
    require_valid(d);
    DimerGraph g = build_graph(d);
    std::map<TorusPoint, VertexRef> at[2];
    for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
        const auto& p = d.polytopes[i].polygon;
        int c = d.polytopes[i].color == Color::White ? 0 : 1;
        for (std::size_t k = 0; k < p.size(); ++k) at[c][reduce_mod_lattice(p[k])] = {static_cast<int>(i), static_cast<int>(k)};
    }
    std::vector<int> graph_index(d.polytopes.size(), -1);
    for (std::size_t i = 0; i < g.whites.size(); ++i) graph_index[g.whites[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < g.blacks.size(); ++j) graph_index[g.blacks[j]] = static_cast<int>(j);
    auto graph_edge = [&](int poly, int vertex) {
        return d.polytopes[poly].color == Color::White ? g.edge_at(graph_index[poly], vertex) : g.edge_at_black(graph_index[poly], vertex);
    };

    std::set<std::pair<int, int>> used;
    std::vector<ZigzagPath> out;
    for (int start_color : {0, 1})
        for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
            if ((d.polytopes[i].color == Color::White ? 0 : 1) != start_color) continue;
            const auto& p0 = d.polytopes[i].polygon;
            for (std::size_t k = 0; k < p0.size(); ++k) {
                if (used.count({static_cast<int>(i), static_cast<int>(k)})) continue;
                ZigzagPath z;
                Vec2 total(0, 0);
                int poly = static_cast<int>(i);
                int from = static_cast<int>(k), to = static_cast<int>(k) + 1;
                Vec2 dir = primitive_direction(p0.vertex(to) - p0.vertex(from));
                while (true) {
                    const auto& p = d.polytopes[poly].polygon;
                    int lo = (to == from + 1) ? from : to;
                    int n = static_cast<int>(p.size());
                    lo = ((lo % n) + n) % n;
                    if (used.count({poly, lo})) {
                        if (z.edges.empty() || z.edges.front().polytope != poly || z.edges.front().start != lo)
                            throw DomainError("zigzag paths overlap");
                        break;
                    }
                    used.insert({poly, lo});
                    z.edges.push_back({poly, lo});
                    Vec2 a = p.vertex(from), b = p.vertex(to);
                    total += b - a;
                    int end_vertex = ((to % n) + n) % n;
                    int next_color = d.polytopes[poly].color == Color::White ? 1 : 0;
                    z.graph_edges.push_back(graph_edge(poly, end_vertex));
                    z.orientation.push_back(next_color == 1 ? 1 : -1);
                    auto it = at[next_color].find(reduce_mod_lattice(b));
                    if (it == at[next_color].end()) throw DomainError("zigzag hits an unmatched vertex");
                    int q = it->second.polytope, m = it->second.vertex;
                    const auto& qp = d.polytopes[q].polygon;
                    if (primitive_direction(qp.vertex(m + 1) - qp.vertex(m)) == dir) {
                        from = m;
                        to = m + 1;
                    } else if (primitive_direction(qp.vertex(m - 1) - qp.vertex(m)) == dir) {
                        from = m;
                        to = m - 1;
                    } else {
                        throw DomainError("zigzag path cannot be continued at " + reduce_mod_lattice(b).coords.str());
                    }
                    poly = q;
                }
                z.cls = to_class(total);
                out.push_back(std::move(z));
            }
        }
    return out;
}

std::vector<DimerFace> faces(const DualDimer& d) { return faces(d, build_graph(d)); }

std::vector<DimerFace> faces(const DualDimer& d, const DimerGraph& g) {
    auto rep = validate(d);
    if (!rep.ok()) throw DomainError("dimer axioms fail:\n" + rep.str());
    if (rep.self_intersecting) throw DomainError("faces undefined for immersed dimer");
    std::map<TorusPoint, VertexRef> at[2];
    for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
        const auto& p = d.polytopes[i].polygon;
        int c = d.polytopes[i].color == Color::White ? 0 : 1;
        for (std::size_t k = 0; k < p.size(); ++k) at[c][reduce_mod_lattice(p[k])] = {static_cast<int>(i), static_cast<int>(k)};
    }
    std::vector<int> graph_index(d.polytopes.size(), -1);
    for (std::size_t i = 0; i < g.whites.size(); ++i) graph_index[g.whites[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < g.blacks.size(); ++j) graph_index[g.blacks[j]] = static_cast<int>(j);

    std::set<std::pair<int, int>> seen;
    std::vector<DimerFace> out;
    for (int first : {1, 0})
        for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
            if ((d.polytopes[i].color == Color::White ? 0 : 1) != first) continue;
            for (std::size_t k = 0; k < d.polytopes[i].polygon.size(); ++k) {
                if (seen.count({static_cast<int>(i), static_cast<int>(k)})) continue;
                DimerFace f;
                Vec2 total(0, 0);
                int poly = static_cast<int>(i), v = static_cast<int>(k);
                while (!seen.count({poly, v})) {
                    seen.insert({poly, v});
                    const auto& p = d.polytopes[poly].polygon;
                    bool white = d.polytopes[poly].color == Color::White;
                    Vec2 x = p.vertex(v);
                    auto ref = at[white ? 1 : 0].at(reduce_mod_lattice(x));
                    const auto& q = d.polytopes[ref.polytope].polygon;
                    total += (x - p.centroid()) + (q.centroid() - q.vertex(ref.vertex));
                    f.polytopes.push_back(poly);
                    f.graph_edges.push_back(white ? g.edge_at(graph_index[poly], v) : g.edge_at_black(graph_index[poly], v));
                    f.orientation.push_back(white ? -1 : 1);
                    poly = ref.polytope;
                    int n = static_cast<int>(q.size());
                    v = ((ref.vertex - 1) % n + n) % n;
                }
                f.cls = to_class(total);
                out.push_back(std::move(f));
            }
        }
    return out;
}

TropicalCurve dimer_to_tropical_fan(const DualDimer& d) {
    require_valid(d);
    std::map<Vec2, long long> rays;
    for (const auto& p : d.polytopes) {
        if (p.color != Color::White) continue;
        for (const auto& e : p.polygon.edges()) {
            Vec2 v = e.b - e.a;
            rays[primitive_direction(Vec2(v.y, -v.x))] += to_ll(lattice_length(v, d.denominator));
        }
    }
    TropicalCurve fan;
    int o = fan.add_vertex(Vec2(0, 0));
    for (const auto& [dir, mult] : rays) fan.add_ray(o, dir, mult);
    return fan;
}

}  // namespace tropdimer
