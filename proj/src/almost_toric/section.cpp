#include "tropdimer/almost_toric.hpp"

#include <set>

namespace tropdimer {

namespace {

// Part of the region where term i is the maximum of the stored terms.
RatPolygon term_cell(const TropicalPolynomial& phi, std::size_t i, RatPolygon cell) {
    const auto& ts = phi.terms();
    for (std::size_t k = 0; k < ts.size() && !cell.vertices().empty(); ++k) {
        if (k == i) continue;
        cell = clip_halfplane(cell, ts[k].exponent - ts[i].exponent, ts[i].coefficient - ts[k].coefficient);
    }
    return cell;
}

struct Affine {
    Vec2 gradient;
    Rat constant;
    bool operator==(const Affine& o) const { return gradient == o.gradient && constant == o.constant; }
};

Affine piece(const TropicalPolynomial& phi, std::size_t i) {
    const auto& t = phi.terms()[i];
    return phi.concave() ? Affine{-t.exponent, -t.coefficient} : Affine{t.exponent, t.coefficient};
}

bool on_slit(const Vec2& p, const Slit& s) {
    Vec2 d = p - s.origin;
    return cross(d, s.direction) == 0 && dot(d, s.direction) >= 0;
}

bool chart_contains(const Chart& c, const Vec2& p) {
    if (!c.region.contains_interior(p)) return false;
    for (const auto& s : c.slits) {
        if (!on_slit(p, s)) continue;
        if (p == s.origin && s.closed_at_origin) continue;
        return false;
    }
    return true;
}

// Primitive directions in which the nonlinearity locus leaves p.
std::set<Vec2> germs(const TropicalPolynomial& phi, const Vec2& p) {
    std::set<Vec2> out;
    TropicalCurve v = nonlinearity_locus(phi);
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
        if (v.vertices[i] == p)
            for (const auto& [d, m] : v.outgoing(static_cast<int>(i))) out.insert(d);
    for (const auto& e : v.edges) {
        Vec2 a = v.vertices[e.from];
        if (a == p) continue;
        bool inside = false;
        if (e.to >= 0) {
            Vec2 b = v.vertices[e.to];
            inside = b != p && point_on_segment(p, a, b);
        } else {
            Vec2 d = p - a;
            inside = cross(d, e.direction) == 0 && dot(d, e.direction) > 0;
        }
        if (inside) {
            out.insert(e.direction);
            out.insert(-e.direction);
        }
    }
    return out;
}

}  // namespace

SectionReport check_section(const ChartedSection& s) {
    SectionReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };
    for (std::size_t o = 0; o < s.overlaps.size(); ++o) {
        const Overlap& ov = s.overlaps[o];
        if (ov.from < 0 || ov.to < 0 || static_cast<std::size_t>(ov.from) >= s.charts.size() ||
            static_cast<std::size_t>(ov.to) >= s.charts.size()) {
            fail("overlap " + std::to_string(o) + " refers to a missing chart");
            continue;
        }
        const TropicalPolynomial& f = s.charts[ov.from].phi;
        TropicalPolynomial g = s.charts[ov.to].phi.pullback(ov.map);
        std::optional<Affine> diff;
        bool consistent = true;
        for (std::size_t i = 0; i < f.terms().size() && consistent; ++i) {
            RatPolygon ci = term_cell(f, i, ov.region);
            if (ci.degenerate()) continue;
            for (std::size_t j = 0; j < g.terms().size(); ++j) {
                RatPolygon cell = term_cell(g, j, ci);
                if (cell.degenerate()) continue;
                Affine a = piece(f, i), b = piece(g, j);
                Affine d{a.gradient - b.gradient, a.constant - b.constant};
                if (!diff) {
                    diff = d;
                } else if (!(*diff == d)) {
                    consistent = false;
                    break;
                }
            }
        }
        if (!consistent) fail("overlap " + std::to_string(o) + ": differentials differ by a non-constant covector");
        else if (diff && !diff->gradient.is_integral())
            fail("overlap " + std::to_string(o) + ": differentials differ by a non-integral covector");
    }
    for (std::size_t n = 0; n < s.nodes.size(); ++n) {
        const SectionNode& node = s.nodes[n];
        bool found = false;
        for (std::size_t c = 0; c < s.charts.size(); ++c) {
            const Chart& ch = s.charts[c];
            if (!chart_contains(ch, node.position)) continue;
            found = true;
            auto gs = germs(ch.phi, node.position);
            for (const auto& sl : ch.slits)
                if (sl.origin == node.position) gs.erase(primitive_direction(sl.direction));
            bool ok = gs.size() <= 1;
            for (const auto& g : gs) ok = ok && parallel(g, node.eigenray);
            if (!ok) fail("node " + node.position.str() + ": locus in chart " + std::to_string(c) + " is not an eigenray germ");
        }
        if (!found) fail("node " + node.position.str() + " lies in no chart");
    }
    return rep;
}

bool validate_section(const ChartedSection& s) { return check_section(s).ok; }

ChartedSection ChartedSection::transformed(const UnimodularMap& g) const {
    UnimodularMap inv = g.inverse();
    auto poly = [&](const RatPolygon& p) {
        std::vector<Vec2> pts;
        for (const auto& v : p.vertices()) pts.push_back(g.apply(v));
        return RatPolygon::from_vertices(pts);
    };
    ChartedSection out;
    for (const auto& c : charts) {
        Chart n;
        n.region = poly(c.region);
        n.phi = c.phi.pullback(inv);
        for (const auto& sl : c.slits) n.slits.push_back({g.apply(sl.origin), g.apply_linear(sl.direction), sl.closed_at_origin});
        out.charts.push_back(n);
    }
    for (const auto& o : overlaps) out.overlaps.push_back({o.from, o.to, g.compose(o.map.compose(inv)), poly(o.region)});
    for (const auto& n : nodes) out.nodes.push_back({g.apply(n.position), g.apply_linear(n.eigenray)});
    return out;
}

namespace {

ChartedSection two_charts(const TropicalPolynomial& a, const TropicalPolynomial& b, bool closed) {
    RatPolygon box = RatPolygon::from_vertices({Vec2(-3, -3), Vec2(3, -3), Vec2(3, 3), Vec2(-3, 3)});
    ChartedSection s;
    s.charts.push_back({box, a, {{Vec2(0, 0), Vec2(1, 1), closed}}});
    s.charts.push_back({box, b, {{Vec2(0, 0), Vec2(-1, -1), closed}}});
    RatPolygon upper = RatPolygon::from_vertices({Vec2(-3, -3), Vec2(3, 3), Vec2(-3, 3)});
    RatPolygon lower = RatPolygon::from_vertices({Vec2(-3, -3), Vec2(3, -3), Vec2(3, 3)});
    s.overlaps.push_back({0, 1, UnimodularMap{}, upper});
    s.overlaps.push_back({0, 1, UnimodularMap::linear(2, -1, 1, 0), lower});
    s.nodes.push_back({Vec2(0, 0), Vec2(1, 1)});
    return s;
}

TropicalPolynomial min_of(std::vector<std::pair<Vec2, Rat>> terms) {
    std::vector<TropicalTerm> ts;
    for (auto& [e, c] : terms) ts.push_back({e, c});
    return TropicalPolynomial::min_plus(ts);
}

}  // namespace

ChartedSection two_chart_example() {
    return two_charts(min_of({{Vec2(0, 0), 1}, {Vec2(1, 0), 0}}),
                      min_of({{Vec2(1, 0), 0}, {Vec2(0, 1), 0}, {Vec2(0, 0), 1}}), true);
}

ChartedSection two_chart_nonexample() {
    return two_charts(min_of({{Vec2(0, 0), 0}, {Vec2(1, 0), 0}}),
                      min_of({{Vec2(0, 0), 0}, {Vec2(1, 0), 0}, {Vec2(0, 1), 0}}), false);
}

}  // namespace tropdimer
