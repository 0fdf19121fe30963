#include "tropdimer/cli.hpp"
#include "tropdimer/almost_toric.hpp"
#include "tropdimer/catalog.hpp"
#include "tropdimer/errors.hpp"
#include "tropdimer/io.hpp"
#include "tropdimer/kasteleyn.hpp"
#include "tropdimer/mutation.hpp"
#include "tropdimer/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace tropdimer {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool color_enabled() {
    const char* v = std::getenv("TROPDIMER_COLOR");
    return v && std::string(v) == "1";
}

std::string paint(const std::string& text, const char* code) {
    if (!color_enabled()) return text;
    return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

const std::string catalog_prefix = "catalog:";

bool is_catalog(const std::string& source) { return source.rfind(catalog_prefix, 0) == 0; }

DimerDocument load_dimer(const std::string& source) {
    if (is_catalog(source)) return {catalog_dimer(source.substr(catalog_prefix.size())), {}};
    return parse_dimer(read_file(source));
}

DualDimer load_valid(const std::string& source) {
    DimerDocument doc = load_dimer(source);
    require_valid(doc.dimer);
    return doc.dimer;
}

std::string class_json(const H1Class& c) { return "[" + std::to_string(c.a) + "," + std::to_string(c.b) + "]"; }

std::string vec_json(const Vec2& v) { return "[\"" + to_string(v.x) + "\",\"" + to_string(v.y) + "\"]"; }

std::string del_pezzo_name(std::string s) {
    if (is_catalog(s)) s = s.substr(catalog_prefix.size());
    const std::string suffix = "-seed";
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) s.resize(s.size() - suffix.size());
    return s;
}

void emit(std::ostream& out, const std::string& out_path, const std::string& text) {
    if (out_path.empty()) out << text;
    else write_file(out_path, text);
}

struct Options {
    std::string input;
    std::string gauge = "paper";
    int face = 0;
    std::string out_path;
    std::string show;
    bool json = false;
    std::string depth = "2";
    std::string radius = "1";
    std::string inner_t;
    std::vector<int> nodes;
    std::string direction = "auto";
    std::string distance;
    int chain = 1;
    long long degree = 1;
};

Rat rat_option(const std::string& text, const char* what) {
    try {
        return parse_rat(text);
    } catch (const std::exception&) {
        throw UsageError(std::string("bad value for ") + what + ": '" + text + "'");
    }
}

int cmd_validate(const Options& o, std::ostream& out) {
    DimerDocument doc = load_dimer(o.input);
    ValidationReport rep = validate(doc.dimer);
    if (o.json) {
        out << "{\"valid\":" << yes(rep.ok()) << ",\"immersed\":" << yes(rep.self_intersecting) << ",\"axioms\":[";
        for (std::size_t i = 0; i < rep.axioms.size(); ++i) {
            const auto& a = rep.axioms[i];
            out << (i ? "," : "") << "{\"name\":\"" << a.name << "\",\"passed\":" << yes(a.passed) << ",\"offenders\":[";
            for (std::size_t k = 0; k < a.offenders.size(); ++k) out << (k ? "," : "") << nlohmann::json(a.offenders[k]).dump();
            out << "]}";
        }
        out << "]}\n";
    } else {
        for (const auto& a : rep.axioms) {
            out << a.name << ": " << (a.passed ? paint("pass", "32") : paint("FAIL", "31")) << "\n";
            for (const auto& off : a.offenders) out << "  " << off << "\n";
        }
        out << "immersed: " << yes(rep.self_intersecting) << "\n";
        for (const auto& ov : rep.overlaps) out << "  " << ov << "\n";
        out << "valid: " << yes(rep.ok()) << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int cmd_graph(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    DimerGraph g = build_graph(d);
    if (o.json) {
        out << "{\"white\":" << g.whites.size() << ",\"black\":" << g.blacks.size() << ",\"edges\":[";
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            out << (i ? "," : "") << "{\"id\":\"" << edge_id(d, g.edges[i]) << "\",\"displacement\":" << vec_json(g.edges[i].displacement) << "}";
        out << "]}\n";
        return 0;
    }
    out << "vertices: " << g.whites.size() << " white, " << g.blacks.size() << " black\n";
    out << "edges: " << g.edges.size() << "\n";
    for (const auto& e : g.edges) out << "  " << edge_id(d, e) << " displacement " << e.displacement.str() << "\n";
    return 0;
}

int cmd_zigzags(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    auto zs = zigzag_paths(d);
    H1Class sum;
    for (const auto& z : zs) sum = sum + z.cls;
    if (o.json) {
        out << "{\"zigzags\":[";
        for (std::size_t i = 0; i < zs.size(); ++i) out << (i ? "," : "") << class_json(zs[i].cls);
        out << "],\"sum\":" << class_json(sum) << "}\n";
        return 0;
    }
    for (std::size_t i = 0; i < zs.size(); ++i)
        out << "zigzag " << i << ": class " << zs[i].cls.str() << ", " << zs[i].edges.size() << " edges\n";
    out << "sum: " << sum.str() << "\n";
    return 0;
}

int cmd_fan(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    TropicalCurve fan = dimer_to_tropical_fan(d);
    auto rays = fan_rays(fan);
    if (o.json) {
        out << "{\"rays\":[";
        for (std::size_t i = 0; i < rays.size(); ++i)
            out << (i ? "," : "") << "{\"direction\":" << vec_json(rays[i].first) << ",\"multiplicity\":" << rays[i].second << "}";
        out << "],\"balanced\":" << yes(check_balancing(fan)) << "}\n";
        return 0;
    }
    for (const auto& [r, m] : rays) out << "ray " << r.str() << " multiplicity " << m << "\n";
    out << "balanced: " << yes(check_balancing(fan)) << "\n";
    return 0;
}

int cmd_kasteleyn(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    Gauge gauge = Gauge::parse(o.gauge);
    KasteleynMatrix m = kasteleyn_matrix(d, gauge);
    LaurentPolynomial det = determinant(m);
    if (o.json) {
        out << "{\"gauge\":\"" << gauge.str() << "\",\"matrix\":[";
        for (std::size_t i = 0; i < m.entries.size(); ++i) {
            out << (i ? "," : "") << "[";
            for (std::size_t j = 0; j < m.entries[i].size(); ++j) out << (j ? "," : "") << laurent_json(m.entries[i][j]);
            out << "]";
        }
        out << "],\"square\":" << yes(m.square()) << ",\"determinant\":" << laurent_json(det)
            << ",\"normalized\":" << laurent_json(normalize_determinant(det)) << "}\n";
        return 0;
    }
    out << det.str() << "\n";
    out << "normalized: " << normalize_determinant(det).str() << "\n";
    if (!m.square()) out << "note: non-square matrix (" << m.rows.size() << " x " << m.cols.size() << ")\n";
    return 0;
}

int cmd_matchings(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    DimerGraph g = build_graph(d);
    auto ms = enumerate_matchings(d, g);
    std::map<Vec2, long long> counts;
    for (const auto& m : ms) counts[m.weight.terms().begin()->first] += 1;
    bool square = g.whites.size() == g.blacks.size();
    bool agree = square && det_matches_matchings(d);
    if (o.json) {
        out << "{\"count\":" << ms.size() << ",\"monomials\":[";
        bool first = true;
        for (const auto& [e, c] : counts) {
            out << (first ? "" : ",") << "{\"exponent\":" << vec_json(e) << ",\"count\":" << c << "}";
            first = false;
        }
        out << "],\"determinant_agrees\":" << yes(agree) << "}\n";
        return 0;
    }
    out << "matchings: " << ms.size() << "\n";
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) out << "  " << format_monomial(it->first) << ": " << it->second << "\n";
    out << "determinant agrees: " << yes(agree) << "\n";
    return 0;
}

int cmd_mutate(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    MutationResult r = mutate_face(d, o.face);
    out << "immersed: " << yes(r.immersed) << "\n";
    std::string doc = serialize_dimer(r.dimer);
    if (o.out_path.empty()) out << doc;
    else write_file(o.out_path, doc);
    return 0;
}

int cmd_euler(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    DimerGraph g = build_graph(d);
    long long v = static_cast<long long>(g.whites.size() + g.blacks.size()), e = static_cast<long long>(g.edges.size());
    long long f = static_cast<long long>(faces(d, g).size());
    out << "V - E + F = " << v << " - " << e << " + " << f << " = " << (v - e + f) << "\n";
    return 0;
}

int cmd_directions(const Options& o, std::ostream& out) {
    DualDimer d = load_valid(o.input);
    DirectionReport rep = mutation_direction_report(d);
    H1Class sum;
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        out << "face " << i << ": " << rep.classes[i].str() << "\n";
        sum = sum + rep.classes[i];
    }
    out << "sum: " << sum.str() << "\n";
    out << "torsion:";
    if (rep.torsion.empty()) out << " none";
    for (auto t : rep.torsion) out << " Z/" << t;
    out << "\n";
    return 0;
}

int cmd_compare_seed(const Options& o, std::ostream& out) {
    DelPezzo dp = del_pezzo(del_pezzo_name(o.input));
    auto seeds = seed_directions(dp.polygon);
    auto dirs = mutation_directions(dp.seed);
    auto show = [&](const char* label, const std::vector<H1Class>& cs) {
        out << label << ":";
        for (const auto& c : cs) out << " " << c.str();
        out << "\n";
    };
    show("seed directions", seeds);
    show("mutation directions", dirs);
    auto map = compare_up_to_unimodular(seeds, dirs);
    if (!map) {
        out << "map: none\n";
        return 1;
    }
    out << "map: [[" << map->m[0][0] << "," << map->m[0][1] << "],[" << map->m[1][0] << "," << map->m[1][1] << "]]\n";
    return 0;
}

DiagramDocument exchange_input(const std::string& source) {
    if (source == "local") return {local_model_diagram(), local_line_curve()};
    const auto& names = del_pezzo_names();
    std::string dp = del_pezzo_name(source);
    if (std::find(names.begin(), names.end(), dp) != names.end()) {
        BaseDiagram d = del_pezzo(dp).traded;
        return {d, build_outer_torus(d)};
    }
    DiagramDocument doc = parse_diagram(read_file(source));
    if (!doc.curve) throw DomainError("diagram carries no curve");
    return doc;
}

void curve_summary(const DiagramDocument& doc, std::ostream& out) {
    out << "balanced: " << yes(balanced_on_base(*doc.curve, doc.diagram)) << "\n";
    out << "admissible: " << yes(admissible(*doc.curve, doc.diagram)) << "\n";
}

int cmd_atf(const std::string& which, const Options& o, std::ostream& out) {
    if (which == "an") {
        AnChain a = an_chain_curve(o.chain);
        DiagramDocument doc{a.diagram, a.curve};
        emit(out, o.out_path, serialize_diagram(doc));
        if (!o.out_path.empty()) curve_summary(doc, out);
        return 0;
    }
    if (which == "exchange") {
        DiagramDocument doc = exchange_input(o.input);
        std::vector<int> nodes = o.nodes;
        if (nodes.empty())
            for (std::size_t i = 0; i < doc.diagram.nodes.size(); ++i) nodes.push_back(static_cast<int>(i));
        ExchangeDirection dir = ExchangeDirection::Auto;
        if (o.direction == "forward") dir = ExchangeDirection::Forward;
        else if (o.direction == "inverse") dir = ExchangeDirection::Inverse;
        else if (o.direction != "auto") throw UsageError("direction must be auto, forward or inverse");
        std::optional<Rat> dist;
        if (!o.distance.empty()) dist = rat_option(o.distance, "--distance");
        doc.curve = nodal_trade_exchange(*doc.curve, doc.diagram, nodes, dir, dist);
        emit(out, o.out_path, serialize_diagram(doc));
        if (!o.out_path.empty()) curve_summary(doc, out);
        return 0;
    }
    DelPezzo dp = del_pezzo(del_pezzo_name(o.input));
    BaseDiagram d = trade_all(dp.polygon, rat_option(o.depth, "--depth"));
    DiagramDocument doc{d, std::nullopt};
    if (which == "outer") doc.curve = build_outer_torus(d, rat_option(o.radius, "--r"));
    if (which == "inner") doc.curve = build_inner_torus(d, o.inner_t.empty() ? std::nullopt : std::optional<Rat>(rat_option(o.inner_t, "--t")));
    emit(out, o.out_path, serialize_diagram(doc));
    if (!o.out_path.empty() && doc.curve) curve_summary(doc, out);
    return 0;
}

int cmd_genus(const Options& o, std::ostream& out) {
    RatPolygon tri = dilated_unit_triangle(o.degree);
    out << "genus: " << genus_of(tri) << "\n";
    out << "formula: " << genus_degree(o.degree) << "\n";
    return genus_of(tri) == genus_degree(o.degree) ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out) {
    RenderOptions ro;
    if (!o.show.empty()) {
        std::stringstream ss(o.show);
        std::string layer;
        while (std::getline(ss, layer, ',')) {
            if (layer != "polytopes" && layer != "edges" && layer != "zigzags") throw UsageError("unknown layer '" + layer + "'");
            ro.layers.insert(layer);
        }
    }
    std::string svg;
    if (is_catalog(o.input)) {
        DualDimer d = catalog_dimer(o.input.substr(catalog_prefix.size()));
        svg = render_dimer_svg(d, ro);
    } else {
        std::string text = read_file(o.input);
        if (document_kind(text) == "dimer") {
            DimerDocument doc = parse_dimer(text);
            require_valid(doc.dimer);
            svg = render_dimer_svg(doc.dimer, ro);
        } else {
            svg = render_diagram_svg(parse_diagram(text), ro);
        }
    }
    emit(out, o.out_path, svg);
    return 0;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    if (o.input.empty()) {
        for (const auto& n : catalog_names()) out << n << "\n";
        return 0;
    }
    std::string name = is_catalog(o.input) ? o.input.substr(catalog_prefix.size()) : o.input;
    emit(out, o.out_path, serialize_dimer(catalog_dimer(name)));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dual dimers, tropical curves and almost-toric diagrams", "tropdimer"};
    app.require_subcommand(1);
    Options o;
    std::string command;

    auto dimer_cmd = [&](const char* name, const char* help) {
        CLI::App* sc = app.add_subcommand(name, help);
        sc->add_option("input", o.input, "dimer file or catalog:<name>")->required();
        sc->add_flag("--json", o.json, "JSON output");
        sc->callback([&, name] { command = name; });
        return sc;
    };
    dimer_cmd("validate", "check the dimer axioms");
    dimer_cmd("graph", "list the bipartite graph");
    dimer_cmd("zigzags", "zigzag paths and their classes");
    dimer_cmd("fan", "tropical fan of the dimer");
    dimer_cmd("kasteleyn", "Kasteleyn determinant")->add_option("--gauge", o.gauge, "paper, trivial or random:<seed>");
    dimer_cmd("matchings", "perfect matchings");
    auto* mut = dimer_cmd("mutate", "mutate at a face");
    mut->add_option("--face", o.face, "face index");
    mut->add_option("--out", o.out_path, "output file");
    dimer_cmd("euler", "Euler characteristic");
    dimer_cmd("directions", "mutation directions");

    auto* cmp = app.add_subcommand("compare-seed", "compare seed and mutation directions of a del Pezzo");
    cmp->add_option("name", o.input, "cp2, p1p1, bl1, bl2 or bl3")->required();
    cmp->callback([&] { command = "compare-seed"; });

    auto* atf = app.add_subcommand("atf", "almost-toric diagrams");
    atf->require_subcommand(1);
    std::string atf_which;
    auto atf_cmd = [&](const char* name, const char* help) {
        CLI::App* sc = atf->add_subcommand(name, help);
        sc->add_option("--out", o.out_path, "output file");
        sc->callback([&, name] {
            command = "atf";
            atf_which = name;
        });
        return sc;
    };
    auto* trade = atf_cmd("trade", "trade every corner of a del Pezzo polygon");
    trade->add_option("name", o.input)->required();
    trade->add_option("--depth", o.depth, "node depth");
    auto* outer = atf_cmd("outer", "outer torus curve");
    outer->add_option("name", o.input)->required();
    outer->add_option("--depth", o.depth, "node depth");
    outer->add_option("--r", o.radius, "collar distance");
    auto* inner = atf_cmd("inner", "inner torus curve");
    inner->add_option("name", o.input)->required();
    inner->add_option("--depth", o.depth, "node depth");
    inner->add_option("--t", o.inner_t, "vertex distance");
    auto* exch = atf_cmd("exchange", "nodal trade exchange");
    exch->add_option("input", o.input, "diagram file, del Pezzo name or 'local'")->required();
    exch->add_option("--node", o.nodes, "node index (repeatable; default all)");
    exch->add_option("--direction", o.direction, "auto, forward or inverse");
    exch->add_option("--distance", o.distance, "distance of the moved vertex from the node");
    auto* an = atf_cmd("an", "A_n chain curve");
    an->add_option("n", o.chain)->required();

    auto* genus = app.add_subcommand("genus", "genus of the degree-d tropical curve");
    genus->add_option("degree", o.degree)->required();
    genus->callback([&] { command = "genus"; });

    auto* render = app.add_subcommand("render", "SVG picture");
    render->add_option("input", o.input)->required();
    render->add_option("--show", o.show, "extra layers, comma separated");
    render->add_option("--out", o.out_path, "output file");
    render->callback([&] { command = "render"; });

    auto* cat = app.add_subcommand("catalog", "list catalog entries or print one");
    cat->add_option("name", o.input);
    cat->add_option("--out", o.out_path, "output file");
    cat->callback([&] { command = "catalog"; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (command == "validate") return cmd_validate(o, out);
        if (command == "graph") return cmd_graph(o, out);
        if (command == "zigzags") return cmd_zigzags(o, out);
        if (command == "fan") return cmd_fan(o, out);
        if (command == "kasteleyn") return cmd_kasteleyn(o, out);
        if (command == "matchings") return cmd_matchings(o, out);
        if (command == "mutate") return cmd_mutate(o, out);
        if (command == "euler") return cmd_euler(o, out);
        if (command == "directions") return cmd_directions(o, out);
        if (command == "compare-seed") return cmd_compare_seed(o, out);
        if (command == "atf") return cmd_atf(atf_which, o, out);
        if (command == "genus") return cmd_genus(o, out);
        if (command == "render") return cmd_render(o, out);
        if (command == "catalog") return cmd_catalog(o, out);
        err << "usage error: no command\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tropdimer
