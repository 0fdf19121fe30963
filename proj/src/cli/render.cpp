#include "tropdimer/render.hpp"
#include "tropdimer/errors.hpp"

#include <sstream>

namespace tropdimer {

namespace {

// Decimal with at most three fractional digits, rounded half up.
std::string decimal(const Rat& r) {
    Int scaled = num(floor(r * 1000 + Rat(1, 2)));
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    Int whole = scaled / 1000, part = scaled % 1000;
    std::string s = (neg && scaled != 0 ? "-" : "") + to_string(whole);
    if (part != 0) {
        std::string f = to_string(part);
        f = std::string(3 - f.size(), '0') + f;
        while (f.back() == '0') f.pop_back();
        s += "." + f;
    }
    return s;
}

struct Frame {
    Rat x0, y0, x1, y1;
    Rat scale;
    Rat margin;

    void include(const Vec2& p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
    std::string x(const Rat& v) const { return decimal((v - x0 + margin) * scale); }
    std::string y(const Rat& v) const { return decimal((y1 - v + margin) * scale); }
    std::string pt(const Vec2& p) const { return x(p.x) + "," + y(p.y); }
    std::string width() const { return decimal((x1 - x0 + 2 * margin) * scale); }
    std::string height() const { return decimal((y1 - y0 + 2 * margin) * scale); }
};

std::string header(const Frame& f) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\"" << f.height() << "\" viewBox=\"0 0 "
       << f.width() << " " << f.height() << "\">\n";
    return os.str();
}

std::string points(const Frame& f, const std::vector<Vec2>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + f.pt(pts[i]);
    return s;
}

}  // namespace

std::string render_dimer_svg(const DualDimer& d, const RenderOptions& opt) {
    Frame f{0, 0, 1, 1, Rat(opt.scale), Rat(1, 20)};
    for (const auto& p : d.polytopes)
        for (const auto& v : p.polygon.vertices()) f.include(v);
    std::ostringstream os;
    os << header(f);
    os << "<rect class=\"domain\" x=\"" << f.x(0) << "\" y=\"" << f.y(1) << "\" width=\"" << decimal(Rat(opt.scale)) << "\" height=\""
       << decimal(Rat(opt.scale)) << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 4\"/>\n";
    if (opt.layers.count("polytopes"))
        for (const auto& p : d.polytopes) {
            bool white = p.color == Color::White;
            os << "<polygon class=\"" << color_name(p.color) << "\" points=\"" << points(f, p.polygon.vertices()) << "\" fill=\""
               << (white ? "none" : "#222") << "\" stroke=\"#000\"/>\n";
        }
    if (opt.layers.count("edges")) {
        DimerGraph g = build_graph(d);
        for (const auto& e : g.edges) {
            Vec2 wc = d.polytopes[g.whites[e.white]].polygon.centroid();
            Vec2 bc = d.polytopes[g.blacks[e.black]].polygon.centroid();
            os << "<line class=\"edge\" x1=\"" << f.x(wc.x) << "\" y1=\"" << f.y(wc.y) << "\" x2=\"" << f.x(e.white_lift.x) << "\" y2=\""
               << f.y(e.white_lift.y) << "\" stroke=\"#c33\"/>\n";
            os << "<line class=\"edge\" x1=\"" << f.x(e.black_lift.x) << "\" y1=\"" << f.y(e.black_lift.y) << "\" x2=\"" << f.x(bc.x)
               << "\" y2=\"" << f.y(bc.y) << "\" stroke=\"#c33\"/>\n";
        }
    }
    if (opt.layers.count("zigzags")) {
        for (const auto& z : zigzag_paths(d)) {
            std::vector<Vec2> pts;
            Vec2 shift(0, 0);
            for (const auto& ref : z.edges) {
                const RatPolygon& p = d.polytopes[ref.polytope].polygon;
                Vec2 a = p.vertex(ref.start), b = p.vertex(ref.start + 1);
                // walk direction follows the zigzag class
                if (!pts.empty()) {
                    Vec2 last = pts.back();
                    Vec2 from = reduce_mod_lattice(last).coords == reduce_mod_lattice(a + shift).coords ? a : b;
                    Vec2 to = from == a ? b : a;
                    shift = last - from;
                    pts.push_back(to + shift);
                } else {
                    Vec2 next_dir = b - a;
                    if (cross(next_dir, to_vec(z.cls)) == 0 && dot(next_dir, to_vec(z.cls)) < 0) std::swap(a, b);
                    pts.push_back(a);
                    pts.push_back(b);
                }
            }
            os << "<g class=\"zigzag\"><polyline points=\"" << points(f, pts) << "\" fill=\"none\" stroke=\"#36c\"/></g>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_diagram_svg(const DiagramDocument& doc, const RenderOptions& opt) {
    const BaseDiagram& d = doc.diagram;
    Frame f{0, 0, 0, 0, Rat(opt.scale), 1};
    bool any = false;
    auto take = [&](const Vec2& p) {
        if (!any) {
            f.x0 = f.x1 = p.x;
            f.y0 = f.y1 = p.y;
            any = true;
        }
        f.include(p);
    };
    if (d.boundary)
        for (const auto& v : d.boundary->vertices()) take(v);
    for (const auto& n : d.nodes) take(n.position);
    if (doc.curve) {
        for (const auto& v : doc.curve->curve.vertices) take(v);
        for (const auto& e : doc.curve->curve.edges)
            if (e.end) take(*e.end);
    }
    if (!any) take(Vec2(0, 0));
    Rat span = std::max(f.x1 - f.x0, f.y1 - f.y0);
    if (span == 0) span = 1;
    f.margin = span / 8;
    f.scale = Rat(opt.scale) / span;

    std::ostringstream os;
    os << header(f);
    if (d.boundary) {
        std::vector<Vec2> pts;
        for (const auto& v : d.boundary->vertices()) pts.push_back(v);
        os << "<polygon class=\"boundary\" points=\"" << points(f, pts) << "\" fill=\"none\" stroke=\"#000\"/>\n";
    }
    for (const auto& c : d.cuts) {
        Vec2 a = d.nodes[c.node].position;
        Vec2 b = a + c.direction * (d.nodes[c.node].depth > 0 ? d.nodes[c.node].depth : Rat(span / 4));
        os << "<line class=\"cut\" x1=\"" << f.x(a.x) << "\" y1=\"" << f.y(a.y) << "\" x2=\"" << f.x(b.x) << "\" y2=\""
           << f.y(b.y) << "\" stroke=\"#888\" stroke-dasharray=\"4 4\"/>\n";
    }
    if (doc.curve) {
        const TropicalCurve& cv = doc.curve->curve;
        for (const auto& e : cv.edges) {
            Vec2 a = cv.vertices[e.from];
            Vec2 b = e.to >= 0 ? cv.vertices[e.to] : e.end ? *e.end : a + e.direction * (span / 4);
            os << "<line class=\"" << (e.to >= 0 ? "segment" : e.end ? "leaf" : "ray") << "\" x1=\"" << f.x(a.x) << "\" y1=\""
               << f.y(a.y) << "\" x2=\"" << f.x(b.x) << "\" y2=\"" << f.y(b.y) << "\" stroke=\"#36c\" stroke-width=\""
               << e.multiplicity << "\"/>\n";
        }
    }
    for (const auto& n : d.nodes) {
        Vec2 p = n.position;
        Rat r = 5 / f.scale;
        os << "<path class=\"node\" d=\"M" << f.x(p.x - r) << "," << f.y(p.y - r) << " L" << f.x(p.x + r) << "," << f.y(p.y + r) << " M"
           << f.x(p.x - r) << "," << f.y(p.y + r) << " L" << f.x(p.x + r) << "," << f.y(p.y - r) << "\" stroke=\"#c00\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tropdimer
