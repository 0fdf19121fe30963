#include "tropdimer/io.hpp"
#include "tropdimer/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace tropdimer {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col), line, col);
    }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("schema: " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) schema_error(where + " must be an object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(where + " lacks \"" + key + "\"");
    return *it;
}

long long integer(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) {
        auto u = j.get<unsigned long long>();
        if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) schema_error(where + " is too large");
        return static_cast<long long>(u);
    }
    if (!j.is_number_integer()) schema_error(where + " must be an integer");
    return j.get<long long>();
}

const json& array(const json& j, const std::string& where) {
    if (!j.is_array()) schema_error(where + " must be an array");
    return j;
}

std::pair<long long, long long> pair_of(const json& j, const std::string& where) {
    array(j, where);
    if (j.size() != 2) schema_error(where + " must have two entries");
    return {integer(j[0], where), integer(j[1], where)};
}

Vec2 scaled_point(const json& j, long long denom, const std::string& where) {
    auto [x, y] = pair_of(j, where);
    return Vec2(make_rat(x, denom), make_rat(y, denom));
}

Rat fraction(const json& j, const std::string& where) {
    auto [n, d] = pair_of(j, where);
    if (d <= 0) schema_error(where + " needs a positive denominator");
    return make_rat(n, d);
}

std::string num_str(const Rat& r) { return to_string(r); }

std::string point_str(const Vec2& v, long long denom) {
    Vec2 s = v * Rat(denom);
    if (!s.is_integral()) throw DomainError("coordinate " + v.str() + " is not on the 1/" + std::to_string(denom) + " grid");
    return "[" + num_str(s.x) + "," + num_str(s.y) + "]";
}

void check_schema(const json& j, const std::string& expected) {
    const json& s = field(j, "schema", "document");
    if (!s.is_string() || s.get<std::string>() != expected) schema_error("expected schema \"" + expected + "\"");
}

std::map<TorusPoint, std::string> ids_by_anchor(const DualDimer& d) {
    std::map<TorusPoint, std::string> out;
    DimerGraph g = build_graph(d);
    for (const auto& e : g.edges) out[e.anchor] = edge_id(d, e);
    return out;
}

}  // namespace

std::string document_kind(const std::string& text) {
    json j = parse_json(text);
    const json& s = field(j, "schema", "document");
    if (s == "tropdimer/1") return "dimer";
    if (s == "tropdiagram/1") return "diagram";
    schema_error("unknown schema");
}

DimerDocument parse_dimer(const std::string& text) {
    json j = parse_json(text);
    check_schema(j, "tropdimer/1");
    for (const auto& [key, value] : j.items())
        if (key != "schema" && key != "denominator" && key != "polytopes" && key != "weights") schema_error("unknown field \"" + key + "\"");
    DimerDocument doc;
    long long n = integer(field(j, "denominator", "document"), "denominator");
    if (n < 1) schema_error("denominator must be positive");
    doc.dimer.denominator = n;
    const json& polys = array(field(j, "polytopes", "document"), "polytopes");
    for (std::size_t i = 0; i < polys.size(); ++i) {
        std::string where = "polytope " + std::to_string(i);
        const json& c = field(polys[i], "color", where);
        Polytope p;
        if (c == "white") p.color = Color::White;
        else if (c == "black") p.color = Color::Black;
        else schema_error(where + " color must be \"white\" or \"black\"");
        for (const auto& [key, value] : polys[i].items())
            if (key != "color" && key != "vertices") schema_error(where + " has unknown field \"" + key + "\"");
        const json& vs = array(field(polys[i], "vertices", where), where + " vertices");
        std::vector<Vec2> pts;
        for (const auto& v : vs) pts.push_back(scaled_point(v, n, where + " vertex"));
        try {
            p.polygon = RatPolygon::from_vertices(pts);
        } catch (const DomainError& e) {
            schema_error(where + ": " + e.what());
        }
        doc.dimer.polytopes.push_back(std::move(p));
    }
    if (j.contains("weights")) {
        const json& w = j["weights"];
        if (!w.is_object()) schema_error("weights must be an object");
        for (const auto& [key, value] : w.items()) {
            Rat r = fraction(value, "weight " + key);
            if (r < 0) schema_error("weight " + key + " is negative");
            doc.weights[key] = r;
        }
    }
    return doc;
}

DimerDocument canonicalize(const DimerDocument& doc) {
    DimerDocument out;
    out.dimer = doc.dimer;
    std::stable_sort(out.dimer.polytopes.begin(), out.dimer.polytopes.end(), [](const Polytope& a, const Polytope& b) {
        if (a.color != b.color) return a.color == Color::White;
        return a.polygon.vertices() < b.polygon.vertices();
    });
    if (!doc.weights.empty()) {
        auto before = ids_by_anchor(doc.dimer);
        auto after = ids_by_anchor(out.dimer);
        std::map<std::string, std::string> rename;
        for (const auto& [anchor, id] : before) rename[id] = after.at(anchor);
        for (const auto& [id, w] : doc.weights) {
            auto it = rename.find(id);
            if (it == rename.end()) throw DomainError("weight refers to unknown edge " + id);
            out.weights[it->second] = w;
        }
    }
    return out;
}

DualDimer canonicalize(const DualDimer& d) { return canonicalize(DimerDocument{d, {}}).dimer; }

std::string serialize_dimer(const DualDimer& d) { return serialize_dimer(DimerDocument{d, {}}); }

std::string serialize_dimer(const DimerDocument& input) {
    DimerDocument doc = canonicalize(input);
    const DualDimer& d = doc.dimer;
    std::ostringstream os;
    os << "{\"schema\":\"tropdimer/1\",\"denominator\":" << d.denominator << ",\"polytopes\":[\n";
    for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
        const auto& p = d.polytopes[i];
        os << "{\"color\":\"" << color_name(p.color) << "\",\"vertices\":[";
        for (std::size_t k = 0; k < p.polygon.size(); ++k) os << (k ? "," : "") << point_str(p.polygon[k], d.denominator);
        os << "]}" << (i + 1 < d.polytopes.size() ? "," : "") << "\n";
    }
    os << "]";
    if (!doc.weights.empty()) {
        os << ",\"weights\":{";
        bool first = true;
        for (const auto& [id, w] : doc.weights) {
            os << (first ? "" : ",") << json(id).dump() << ":[" << to_string(num(w)) << "," << to_string(den(w)) << "]";
            first = false;
        }
        os << "}";
    }
    os << "}\n";
    return os.str();
}

std::string laurent_json(const LaurentPolynomial& p) {
    std::string out = "[";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Int d = common_denominator(e);
        out += std::string(first ? "" : ",") + "[[" + to_string(num(e.x * Rat(d))) + "," + to_string(num(e.y * Rat(d))) + "," +
               to_string(d) + "]," + to_string(num(c)) + "," + to_string(den(c)) + "]";
        first = false;
    }
    return out + "]";
}

namespace {

Int diagram_denominator(const DiagramDocument& doc) {
    Int n = 1;
    auto take = [&](const Vec2& v) { n = lcm(n, common_denominator(v)); };
    const BaseDiagram& d = doc.diagram;
    if (d.boundary)
        for (const auto& v : d.boundary->vertices()) take(v);
    for (const auto& node : d.nodes) {
        take(node.position);
        n = lcm(n, den(node.depth));
    }
    if (doc.curve) {
        for (const auto& v : doc.curve->curve.vertices) take(v);
        for (const auto& e : doc.curve->curve.edges)
            if (e.end) take(*e.end);
    }
    return n;
}

std::string int_pair(const Vec2& v) { return "[" + to_string(v.x) + "," + to_string(v.y) + "]"; }

}  // namespace

std::string serialize_diagram(const DiagramDocument& doc) {
    const BaseDiagram& d = doc.diagram;
    long long n = to_ll(diagram_denominator(doc));
    std::ostringstream os;
    os << "{\"schema\":\"tropdiagram/1\",\"denominator\":" << n << ",\n\"boundary\":";
    if (d.boundary) {
        os << "[";
        for (std::size_t i = 0; i < d.boundary->size(); ++i) os << (i ? "," : "") << point_str((*d.boundary)[i], n);
        os << "]";
    } else {
        os << "null";
    }
    os << ",\n\"traded\":[";
    for (std::size_t i = 0; i < d.traded.size(); ++i) os << (i ? "," : "") << (d.traded[i] ? "true" : "false");
    os << "],\n\"nodes\":[";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const Node& node = d.nodes[i];
        os << (i ? ",\n" : "\n") << "{\"position\":" << point_str(node.position, n) << ",\"eigenray\":" << int_pair(node.eigenray)
           << ",\"multiplicity\":" << node.multiplicity << ",\"corner\":" << node.corner << ",\"depth\":" << to_string(node.depth * Rat(n))
           << "}";
    }
    os << "],\n\"cuts\":[";
    for (std::size_t i = 0; i < d.cuts.size(); ++i) {
        const Cut& c = d.cuts[i];
        const auto& m = c.transition.m;
        os << (i ? ",\n" : "\n") << "{\"node\":" << c.node << ",\"direction\":" << int_pair(c.direction) << ",\"matrix\":[[" << m[0][0]
           << "," << m[0][1] << "],[" << m[1][0] << "," << m[1][1] << "]]}";
    }
    os << "]";
    if (doc.curve) {
        const TropicalCurve& cv = doc.curve->curve;
        os << ",\n\"curve\":{\"vertices\":[";
        for (std::size_t i = 0; i < cv.vertices.size(); ++i) os << (i ? "," : "") << point_str(cv.vertices[i], n);
        os << "],\n\"edges\":[";
        for (std::size_t i = 0; i < cv.edges.size(); ++i) {
            const CurveEdge& e = cv.edges[i];
            os << (i ? ",\n" : "\n") << "{\"from\":" << e.from;
            if (e.to >= 0) os << ",\"to\":" << e.to;
            else if (e.end) os << ",\"end\":" << point_str(*e.end, n);
            else os << ",\"ray\":" << int_pair(e.direction);
            os << ",\"multiplicity\":" << e.multiplicity << "}";
        }
        os << "],\n\"attachments\":[";
        for (std::size_t i = 0; i < doc.curve->attachments.size(); ++i)
            os << (i ? "," : "") << "[" << doc.curve->attachments[i].first << "," << doc.curve->attachments[i].second << "]";
        os << "]}";
    }
    os << "}\n";
    return os.str();
}

DiagramDocument parse_diagram(const std::string& text) {
    json j = parse_json(text);
    check_schema(j, "tropdiagram/1");
    DiagramDocument doc;
    BaseDiagram& d = doc.diagram;
    long long n = integer(field(j, "denominator", "document"), "denominator");
    if (n < 1) schema_error("denominator must be positive");
    const json& b = field(j, "boundary", "document");
    if (!b.is_null()) {
        std::vector<Vec2> pts;
        for (const auto& v : array(b, "boundary")) pts.push_back(scaled_point(v, n, "boundary vertex"));
        try {
            d.boundary = RatPolygon::from_vertices(pts);
        } catch (const DomainError& e) {
            schema_error(std::string("boundary: ") + e.what());
        }
    }
    if (j.contains("traded"))
        for (const auto& t : array(j["traded"], "traded")) {
            if (!t.is_boolean()) schema_error("traded entries must be booleans");
            d.traded.push_back(t.get<bool>());
        }
    if (d.boundary && d.traded.empty()) d.traded.assign(d.boundary->size(), false);
    if (d.boundary && d.traded.size() != d.boundary->size()) schema_error("traded needs one entry per boundary corner");
    for (const auto& jn : array(field(j, "nodes", "document"), "nodes")) {
        Node node;
        node.position = scaled_point(field(jn, "position", "node"), n, "node position");
        auto [ex, ey] = pair_of(field(jn, "eigenray", "node"), "node eigenray");
        if (ex == 0 && ey == 0) schema_error("node eigenray is zero");
        node.eigenray = primitive_direction(Vec2(ex, ey));
        if (jn.contains("multiplicity")) node.multiplicity = integer(jn["multiplicity"], "node multiplicity");
        if (node.multiplicity < 1) schema_error("node multiplicity must be positive");
        if (jn.contains("corner")) node.corner = static_cast<int>(integer(jn["corner"], "node corner"));
        if (jn.contains("depth")) node.depth = make_rat(integer(jn["depth"], "node depth"), n);
        d.nodes.push_back(node);
    }
    for (const auto& jc : array(field(j, "cuts", "document"), "cuts")) {
        Cut c;
        long long idx = integer(field(jc, "node", "cut"), "cut node");
        if (idx < 0 || static_cast<std::size_t>(idx) >= d.nodes.size()) schema_error("cut refers to a missing node");
        c.node = static_cast<int>(idx);
        auto [dx, dy] = pair_of(field(jc, "direction", "cut"), "cut direction");
        if (dx == 0 && dy == 0) schema_error("cut direction is zero");
        c.direction = Vec2(dx, dy);
        const json& m = array(field(jc, "matrix", "cut"), "cut matrix");
        if (m.size() != 2) schema_error("cut matrix must be 2x2");
        auto [a, bb] = pair_of(m[0], "cut matrix row");
        auto [cc, dd] = pair_of(m[1], "cut matrix row");
        try {
            c.transition = UnimodularMap::linear(a, bb, cc, dd);
        } catch (const DomainError&) {
            schema_error("cut matrix is not unimodular");
        }
        d.cuts.push_back(c);
    }
    if (j.contains("curve")) {
        const json& jc = j["curve"];
        CurveOnBase c;
        for (const auto& v : array(field(jc, "vertices", "curve"), "curve vertices")) c.curve.add_vertex(scaled_point(v, n, "curve vertex"));
        auto vertex = [&](const json& x, const char* what) {
            long long v = integer(x, what);
            if (v < 0 || static_cast<std::size_t>(v) >= c.curve.vertices.size()) schema_error(std::string(what) + " out of range");
            return static_cast<int>(v);
        };
        for (const auto& je : array(field(jc, "edges", "curve"), "curve edges")) {
            int from = vertex(field(je, "from", "curve edge"), "edge start");
            long long mult = je.contains("multiplicity") ? integer(je["multiplicity"], "edge multiplicity") : 1;
            if (mult < 1) schema_error("edge multiplicity must be positive");
            if (je.contains("to")) {
                int to = vertex(je["to"], "edge end");
                if (c.curve.vertices[to] == c.curve.vertices[from]) schema_error("edge has zero length");
                c.curve.add_segment(from, to, mult);
            } else if (je.contains("end")) {
                Vec2 end = scaled_point(je["end"], n, "edge end");
                if (end == c.curve.vertices[from]) schema_error("edge has zero length");
                c.curve.add_leaf(from, end, mult);
            } else if (je.contains("ray")) {
                auto [rx, ry] = pair_of(je["ray"], "edge ray");
                if (rx == 0 && ry == 0) schema_error("ray direction is zero");
                c.curve.add_ray(from, Vec2(rx, ry), mult);
            } else {
                schema_error("curve edge needs \"to\", \"end\" or \"ray\"");
            }
        }
        if (jc.contains("attachments"))
            for (const auto& ja : array(jc["attachments"], "attachments")) {
                auto [e, nd] = pair_of(ja, "attachment");
                if (e < 0 || static_cast<std::size_t>(e) >= c.curve.edges.size()) schema_error("attachment edge out of range");
                if (nd < 0 || static_cast<std::size_t>(nd) >= d.nodes.size()) schema_error("attachment node out of range");
                c.attachments.push_back({static_cast<int>(e), static_cast<int>(nd)});
            }
        doc.curve = c;
    }
    return doc;
}

}  // namespace tropdimer
