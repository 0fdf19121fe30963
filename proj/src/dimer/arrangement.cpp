#include "tropdimer/dimer.hpp"
#include "tropdimer/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace tropdimer {

namespace {

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

struct Line {
    Vec2 dir;     // class as a vector
    Vec2 normal;  // rot90(dir)^perp: <normal, dir> = 0
    Vec2 base;    // point on the line
    Vec2 comp;    // integer vector with <normal, comp> = 1
};

struct Crossing {
    int line[2];
    Rat param[2];
    Vec2 point;  // reduced to [0,1)^2
};

struct HalfEdge {
    int node;
    int line;
    bool forward;
    int target = -1;
    Vec2 disp;
    Vec2 dir;
};

}  // namespace

DualDimer dimer_from_lines(const std::vector<GeodesicLine>& input) {
    if (input.size() < 2) throw DomainError("need at least two lines");
    std::vector<Line> lines;
    for (const auto& gl : input) {
        if (std::gcd(gl.cls.a, gl.cls.b) != 1) throw DomainError("line class " + gl.cls.str() + " is not primitive");
        Line l;
        l.dir = to_vec(gl.cls);
        l.normal = Vec2(-gl.cls.b, gl.cls.a);
        long long x, y;
        // -b x + a y = 1
        ext_gcd(-gl.cls.b, gl.cls.a, x, y);
        l.comp = Vec2(x, y);
        if (dot(l.normal, l.comp) != 1) throw DomainError("internal: bad complement vector");
        l.base = l.comp * gl.offset;
        lines.push_back(l);
    }
    auto param_on = [&](int li, const Vec2& p) {
        // p - base = s*dir + t*comp with det(dir, comp) = 1
        return frac(cross(p - lines[li].base, lines[li].comp));
    };

    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Rat m = dot(lines[j].normal, lines[i].dir);
            if (m == 0) {
                Rat ci = dot(lines[i].normal, lines[i].base);
                Rat cj = dot(lines[i].normal, lines[j].base);
                if (frac(ci - cj) == 0) throw DomainError("parallel lines coincide");
                continue;
            }
            Rat s0 = (dot(lines[j].normal, lines[j].base) - dot(lines[j].normal, lines[i].base)) / m;
            long long count = to_ll(m < 0 ? Rat(-m) : m);
            for (long long k = 0; k < count; ++k) {
                Rat s = frac(s0 + Rat(k) / m);
                Vec2 p = lines[i].base + lines[i].dir * s;
                Crossing c;
                c.line[0] = static_cast<int>(i);
                c.line[1] = static_cast<int>(j);
                c.param[0] = s;
                c.param[1] = param_on(static_cast<int>(j), p);
                c.point = reduce_mod_lattice(p).coords;
                crossings.push_back(c);
            }
        }
    {
        std::vector<Vec2> pts;
        for (const auto& c : crossings) pts.push_back(c.point);
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw DomainError("three lines meet in a point");
    }

    // crossings along each line, sorted by parameter
    std::vector<std::vector<std::pair<Rat, int>>> along(lines.size());
    for (std::size_t c = 0; c < crossings.size(); ++c)
        for (int s = 0; s < 2; ++s) along[crossings[c].line[s]].push_back({crossings[c].param[s], static_cast<int>(c)});
    for (auto& a : along) {
        if (a.empty()) throw DomainError("a line meets no other line");
        std::sort(a.begin(), a.end());
    }

    // half-edges: 4 per crossing
    std::vector<HalfEdge> half;
    std::map<std::tuple<int, int, bool>, int> index;  // (node, line, forward) -> half-edge
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& a = along[li];
        std::size_t n = a.size();
        for (std::size_t r = 0; r < n; ++r) {
            int node = a[r].second;
            for (bool fwd : {true, false}) {
                HalfEdge h;
                h.node = node;
                h.line = static_cast<int>(li);
                h.forward = fwd;
                std::size_t r2 = fwd ? (r + 1) % n : (r + n - 1) % n;
                h.target = a[r2].second;
                Rat len = fwd ? a[r2].first - a[r].first : a[r].first - a[r2].first;
                if (len <= 0) len += 1;
                h.dir = fwd ? lines[li].dir : -lines[li].dir;
                h.disp = h.dir * len;
                index[{node, static_cast<int>(li), fwd}] = static_cast<int>(half.size());
                half.push_back(h);
            }
        }
    }
    // rotation system
    std::vector<std::vector<int>> around(crossings.size());
    for (std::size_t h = 0; h < half.size(); ++h) around[half[h].node].push_back(static_cast<int>(h));
    for (auto& r : around)
        std::sort(r.begin(), r.end(), [&](int a, int b) { return angle_less(half[a].dir, half[b].dir); });
    auto next_in_face = [&](int h) {
        const HalfEdge& e = half[h];
        int twin = index.at({e.target, e.line, !e.forward});
        const auto& r = around[e.target];
        auto it = std::find(r.begin(), r.end(), twin);
        std::size_t pos = static_cast<std::size_t>(it - r.begin());
        return r[(pos + r.size() - 1) % r.size()];
    };

    DualDimer d;
    std::vector<bool> seen(half.size(), false);
    Int denom = 1;
    for (std::size_t h0 = 0; h0 < half.size(); ++h0) {
        if (seen[h0]) continue;
        std::vector<Vec2> pts;
        int fwd = 0, bwd = 0;
        Vec2 cur = crossings[half[h0].node].point;
        int h = static_cast<int>(h0);
        while (!seen[h]) {
            seen[h] = true;
            pts.push_back(cur);
            cur += half[h].disp;
            (half[h].forward ? fwd : bwd)++;
            h = next_in_face(h);
        }
        if (fwd > 0 && bwd > 0) continue;
        RatPolygon poly = RatPolygon::from_vertices(pts);
        for (const auto& v : poly.vertices()) denom = lcm(denom, common_denominator(v));
        d.polytopes.push_back({fwd > 0 ? Color::White : Color::Black, poly});
    }
    d.denominator = to_ll(denom);
    std::stable_sort(d.polytopes.begin(), d.polytopes.end(), [](const Polytope& a, const Polytope& b) {
        return a.color == Color::White && b.color == Color::Black;
    });
    auto rep = validate(d);
    if (!rep.ok()) throw DomainError("line arrangement does not give a dual dimer:\n" + rep.str());
    return d;
}

}  // namespace tropdimer
