#include "tropdimer/mutation.hpp"
#include "tropdimer/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace tropdimer {

GraphWalk boundary_walk(const DimerFace& f) { return {f.graph_edges, f.orientation}; }

Rat cycle_weight(const DimerGraph& g, const GraphWalk& c, const EdgeWeightAssignment& w) {
    if (c.edges.size() != c.orientation.size()) throw DomainError("walk has mismatched orientation list");
    if (c.edges.empty()) return 0;
    std::size_t n = c.edges.size();
    // vertex ids: whites as i, blacks as ~j
    auto ends = [&](std::size_t k) {
        const auto& e = g.edges.at(c.edges[k]);
        int wv = e.white, bv = ~e.black;
        return c.orientation[k] > 0 ? std::pair{bv, wv} : std::pair{wv, bv};
    };
    Rat total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (ends(k).second != ends((k + 1) % n).first) throw DomainError("walk is not closed");
        auto it = w.find(c.edges[k]);
        Rat we = it == w.end() ? Rat(0) : it->second;
        total += c.orientation[k] > 0 ? we : Rat(-we);
    }
    return total;
}

EdgeWeightAssignment exact_assignment(const DualDimer& d) {
    require_valid(d);
    DimerGraph g = build_graph(d);
    EdgeWeightAssignment w;
    for (std::size_t e = 0; e < g.edges.size(); ++e) w[static_cast<int>(e)] = 1;
    return w;
}

MutationResult mutate_face(const DualDimer& d, int face_index) { return mutate_face(d, face_index, exact_assignment(d)); }

MutationResult mutate_face(const DualDimer& d, int face_index, const EdgeWeightAssignment& w) {
    DimerGraph g = build_graph(d);
    auto fs = faces(d, g);
    if (face_index < 0 || static_cast<std::size_t>(face_index) >= fs.size())
        throw DomainError("face " + std::to_string(face_index) + " not found");
    const DimerFace& f = fs[face_index];
    for (const auto& [e, v] : w)
        if (v < 0) throw DomainError("edge weights must be nonnegative");
    if (cycle_weight(g, boundary_walk(f), w) != 0) throw DomainError("face not mutable");

    std::size_t n = f.polytopes.size();
    std::vector<int> sorted = f.polytopes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // unroll the boundary polytopes into the plane
    std::vector<Vec2> shift(n, Vec2(0, 0));
    Vec2 cur(0, 0);
    for (std::size_t i = 0; i < n; ++i) {
        shift[i] = cur;
        const DimerEdge& e = g.edges[f.graph_edges[i]];
        bool white = d.polytopes[f.polytopes[i]].color == Color::White;
        Vec2 here = white ? e.white_lift : e.black_lift;
        Vec2 there = white ? e.black_lift : e.white_lift;
        cur = cur + here - there;
    }
    if (!cur.is_zero()) throw DomainError("face boundary does not close up in the plane");

    std::vector<Vec2> wpts, bpts;
    for (std::size_t i = 0; i < n; ++i) {
        const Polytope& p = d.polytopes[f.polytopes[i]];
        for (const auto& v : p.polygon.vertices()) (p.color == Color::White ? wpts : bpts).push_back(v + shift[i]);
    }
    MutationResult r;
    r.face = face_index;
    r.removed = sorted;
    r.white_hull = convex_hull(wpts);
    r.black_hull = convex_hull(bpts);
    r.dimer.denominator = d.denominator;
    for (std::size_t i = 0; i < d.polytopes.size(); ++i)
        if (!std::binary_search(sorted.begin(), sorted.end(), static_cast<int>(i))) r.dimer.polytopes.push_back(d.polytopes[i]);
    r.dimer.polytopes.push_back({Color::White, r.white_hull});
    r.dimer.polytopes.push_back({Color::Black, r.black_hull});
    auto rep = validate(r.dimer);
    if (!rep.ok()) throw DomainError("mutation result fails the dimer axioms:\n" + rep.str());
    r.immersed = rep.self_intersecting;
    return r;
}

long long euler_characteristic(const DualDimer& d) {
    DimerGraph g = build_graph(d);
    auto fs = faces(d, g);
    return static_cast<long long>(g.whites.size() + g.blacks.size()) - static_cast<long long>(g.edges.size()) +
           static_cast<long long>(fs.size());
}

DirectionReport mutation_direction_report(const DualDimer& d) {
    DimerGraph g = build_graph(d);
    auto fs = faces(d, g);
    auto zs = zigzag_paths(d);
    std::size_t nw = g.whites.size(), nv = nw + g.blacks.size(), ne = g.edges.size();

    // spanning forest; the cycle space is coordinatised by the remaining edges
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (std::size_t e = 0; e < ne; ++e) {
        int a = g.edges[e].white, b = static_cast<int>(nw) + g.edges[e].black;
        adj[a].push_back({b, static_cast<int>(e)});
        adj[b].push_back({a, static_cast<int>(e)});
    }
    std::vector<char> seen(nv, 0), tree(ne, 0);
    for (std::size_t s = 0; s < nv; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [y, e] : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    tree[e] = 1;
                    q.push(y);
                }
        }
    }
    std::vector<int> coord(ne, -1);
    std::size_t k = 0;
    for (std::size_t e = 0; e < ne; ++e)
        if (!tree[e]) coord[e] = static_cast<int>(k++);

    // chain coefficient +1 for white -> black
    auto chain = [&](const std::vector<int>& edges, const std::vector<int>& orient, int sign) {
        std::vector<Int> c(k, 0);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (coord[edges[i]] >= 0) c[coord[edges[i]]] += sign * orient[i];
        return c;
    };
    std::vector<std::vector<Int>> a(k, std::vector<Int>(zs.size(), 0));
    for (std::size_t z = 0; z < zs.size(); ++z) {
        auto c = chain(zs[z].graph_edges, zs[z].orientation, 1);
        for (std::size_t i = 0; i < k; ++i) a[i][z] = c[i];
    }
    SmithForm s = smith_normal_form(a);
    std::size_t rank = 0;
    DirectionReport rep;
    for (std::size_t i = 0; i < std::min(k, zs.size()); ++i)
        if (s.diag[i][i] != 0) {
            ++rank;
            if (s.diag[i][i] > 1) rep.torsion.push_back(to_ll(s.diag[i][i]));
        }
    if (k - rank > 2)
        throw DomainError("cycle space modulo zigzag cycles has rank " + std::to_string(k - rank) + ", expected at most 2");
    for (const auto& f : fs) {
        auto c = chain(f.graph_edges, f.orientation, -1);
        long long xy[2] = {0, 0};
        for (std::size_t r = rank; r < k; ++r) {
            Int v = 0;
            for (std::size_t j = 0; j < k; ++j) v += s.u[r][j] * c[j];
            xy[r - rank] = to_ll(v);
        }
        rep.classes.push_back({xy[0], xy[1]});
    }
    return rep;
}

std::vector<H1Class> mutation_directions(const DualDimer& d) { return mutation_direction_report(d).classes; }

std::vector<H1Class> seed_directions(const RatPolygon& p) {
    if (p.degenerate()) throw DomainError("moment polygon is degenerate");
    std::vector<H1Class> out;
    long long n = static_cast<long long>(p.size());
    for (long long i = 0; i < n; ++i) {
        Vec2 u = primitive_direction(p.vertex(i + 1) - p.vertex(i));
        Vec2 v = primitive_direction(p.vertex(i - 1) - p.vertex(i));
        Rat det = cross(u, v);
        if (det != 1 && det != -1) throw DomainError("corner " + p.vertex(i).str() + " is not Delzant");
        out.push_back(to_class(rot90(primitive_direction(u + v))));
    }
    return out;
}

namespace {

bool same_multiset(std::vector<H1Class> a, std::vector<H1Class> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::optional<UnimodularMap> check(const std::array<long long, 4>& m, const std::vector<H1Class>& a,
                                   const std::vector<H1Class>& b) {
    long long det = m[0] * m[3] - m[1] * m[2];
    if (det != 1 && det != -1) return std::nullopt;
    UnimodularMap u = UnimodularMap::linear(m[0], m[1], m[2], m[3]);
    std::vector<H1Class> img;
    for (const auto& c : a) img.push_back(u.apply(c));
    if (!same_multiset(img, b)) return std::nullopt;
    return u;
}

// Integer vector c with det(p, c) = 1 for primitive p.
H1Class complement(const H1Class& p) {
    // solve p.a * y - p.b * x = 1
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1, a = p.a, b = p.b;
    while (b != 0) {
        long long q = a / b, t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    // x0 * p.a + y0 * p.b = a = +-1
    if (a < 0) {
        x0 = -x0;
        y0 = -y0;
    }
    return {-y0, x0};
}

}  // namespace

std::optional<UnimodularMap> compare_up_to_unimodular(const std::vector<H1Class>& a, const std::vector<H1Class>& b) {
    if (a.size() != b.size()) throw DomainError("direction multisets differ in size");
    std::size_t n = a.size();
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i = 0; i < n && !pair; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (signed_intersection(a[i], a[j]) != 0) {
                pair = {i, j};
                break;
            }
    if (pair) {
        const H1Class &p = a[pair->first], &q = a[pair->second];
        long long det = signed_intersection(p, q);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                if (k == l) continue;
                const H1Class &bp = b[k], &bq = b[l];
                // M [p q] = [bp bq]  =>  M = [bp bq] [p q]^-1
                long long n00 = bp.a * q.b - bq.a * p.b, n01 = -bp.a * q.a + bq.a * p.a;
                long long n10 = bp.b * q.b - bq.b * p.b, n11 = -bp.b * q.a + bq.b * p.a;
                if (n00 % det || n01 % det || n10 % det || n11 % det) continue;
                if (auto u = check({n00 / det, n01 / det, n10 / det, n11 / det}, a, b)) return u;
            }
        return std::nullopt;
    }
    // all classes parallel
    auto first_nonzero = [](const std::vector<H1Class>& v) -> std::optional<H1Class> {
        for (const auto& c : v)
            if (!c.is_zero()) return c;
        return std::nullopt;
    };
    auto fa = first_nonzero(a);
    if (!fa) {
        if (auto u = check({1, 0, 0, 1}, a, b)) return u;
        return std::nullopt;
    }
    long long ga = std::gcd(fa->a, fa->b);
    H1Class pa{fa->a / ga, fa->b / ga}, ca = complement(pa);
    for (const auto& t : b) {
        if (t.is_zero()) continue;
        long long gb = std::gcd(t.a, t.b);
        if (gb != ga) continue;
        H1Class pb{t.a / gb, t.b / gb}, cb = complement(pb);
        // M = [pb cb] [pa ca]^-1, det [pa ca] = 1
        long long m00 = pb.a * ca.b - cb.a * pa.b, m01 = -pb.a * ca.a + cb.a * pa.a;
        long long m10 = pb.b * ca.b - cb.b * pa.b, m11 = -pb.b * ca.a + cb.b * pa.a;
        if (auto u = check({m00, m01, m10, m11}, a, b)) return u;
    }
    return std::nullopt;
}

}  // namespace tropdimer
