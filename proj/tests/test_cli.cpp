#include <doctest.h>

#include "support.hpp"

#include "tropdimer/cli.hpp"
#include "tropdimer/io.hpp"
#include "tropdimer/render.hpp"

#include <fstream>
#include <sstream>

using namespace tropdimer;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string path = std::string(TD_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("catalog files round-trip bit for bit") {
    for (const auto& n : catalog_names()) {
        std::string text = slurp(std::string(TD_CATALOG_DIR) + "/" + n + ".json");
        REQUIRE_MESSAGE(!text.empty(), n);
        CHECK_MESSAGE(text == serialize_dimer(catalog_dimer(n)), n);
        CHECK(serialize_dimer(parse_dimer(text)) == text);
        Run r = run({"catalog", n});
        CHECK(r.code == 0);
        CHECK(r.out == text);
    }
}

TEST_CASE("canonicalization is idempotent and order blind") {
    std::mt19937_64 rng(3);
    for (const auto& n : catalog_names()) {
        DualDimer d = catalog_dimer(n);
        CHECK(canonicalize(canonicalize(d)).polytopes.size() == d.polytopes.size());
        DualDimer shuffled = d;
        std::shuffle(shuffled.polytopes.begin(), shuffled.polytopes.end(), rng);
        CHECK(serialize_dimer(canonicalize(shuffled)) == serialize_dimer(d));
    }
}

TEST_CASE("exit codes") {
    std::string bad_json = temp_file("bad.json", "{\"schema\":\n");
    Run r = run({"validate", bad_json});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    std::string triple = temp_file("triple.json",
                                   "{\"schema\":\"tropdimer/1\",\"denominator\":2,\"polytopes\":[{\"color\":\"white\","
                                   "\"vertices\":[[1,1,12],[1,0],[0,1]]}]}");
    CHECK(run({"validate", triple}).code == 2);

    DualDimer shifted = honeycomb_dimer();
    shifted.polytopes[0].polygon = shifted.polytopes[0].polygon.translated(Vec2(make_rat(1, 6), 0));
    std::string axiom = temp_file("axiom.json", serialize_dimer(shifted));
    Run v = run({"validate", axiom});
    CHECK(v.code == 1);
    CHECK(v.out.find("FAIL") != std::string::npos);

    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"validate", "/nonexistent/x.json"}).code != 0);
    CHECK(run({"kasteleyn", "catalog:honeycomb", "--gauge", "sideways"}).code == 2);
    CHECK(run({"mutate", "catalog:honeycomb", "--face", "9"}).code == 1);
    CHECK(run({"atf", "an", "0"}).code == 1);
    CHECK(run({"atf", "an", "3"}).code == 0);
}

TEST_CASE("validate output") {
    Run r = run({"validate", "catalog:honeycomb"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    Run j = run({"validate", "catalog:honeycomb", "--json"});
    CHECK(j.code == 0);
    CHECK(j.out.find('{') != std::string::npos);
    Run im = run({"validate", "catalog:immersed-hexagon"});
    CHECK(im.code == 0);
}

TEST_CASE("svg rendering") {
    Run r = run({"render", "catalog:honeycomb"});
    CHECK(r.code == 0);
    CHECK(count(r.out, "<polygon") == 6);
    CHECK(r.out.rfind("<svg", 0) == 0);
    Run z = run({"render", "catalog:honeycomb", "--show", "polytopes,zigzags"});
    CHECK(count(z.out, "class=\"zigzag\"") == 3);
    CHECK(run({"render", "catalog:honeycomb"}).out == r.out);
    CHECK(render_dimer_svg(honeycomb_dimer()) == r.out);
}

TEST_CASE("kasteleyn and fan output") {
    Run k = run({"kasteleyn", "catalog:honeycomb"});
    CHECK(k.code == 0);
    KasteleynMatrix m = kasteleyn_matrix(honeycomb_dimer(), Gauge::parse("paper"));
    CHECK(k.out.find(normalize_determinant(determinant(m)).str()) != std::string::npos);
    CHECK(k.out.find("3 - z1 - z2 - z1^-1*z2^-1") != std::string::npos);
    Run f = run({"fan", "catalog:honeycomb"});
    CHECK(f.code == 0);
    CHECK(f.out.find("(-1,-1)") != std::string::npos);
}

TEST_CASE("mutate and compare") {
    Run m = run({"mutate", "catalog:honeycomb", "--face", "1"});
    CHECK(m.code == 0);
    CHECK(m.out.find("immersed: true") != std::string::npos);
    Run c = run({"compare-seed", "cp2"});
    CHECK(c.code == 0);
    CHECK(c.out.find("map: [[") != std::string::npos);
}

TEST_CASE("atf outer torus file round trip through exchange") {
    std::string outer = std::string(TD_TEST_TMP) + "/outer.json";
    std::string ex = std::string(TD_TEST_TMP) + "/exchanged.json";
    std::string back = std::string(TD_TEST_TMP) + "/back.json";
    REQUIRE(run({"atf", "outer", "cp2", "--out", outer}).code == 0);
    Run r = run({"atf", "exchange", outer, "--node", "0", "--node", "1", "--node", "2", "--out", ex});
    CHECK(r.code == 0);
    CHECK(r.out.find("balanced: true") != std::string::npos);
    CHECK(run({"atf", "exchange", ex, "--node", "0", "--node", "1", "--node", "2", "--out", back}).code == 0);
    CHECK(same_curve(*parse_diagram(slurp(back)).curve, *parse_diagram(slurp(outer)).curve));
}

TEST_CASE("diagram documents round trip") {
    DelPezzo dp = del_pezzo("bl2");
    DiagramDocument doc{dp.traded, build_outer_torus(dp.traded)};
    std::string text = serialize_diagram(doc);
    CHECK(document_kind(text) == "diagram");
    CHECK(serialize_diagram(parse_diagram(text)) == text);
    CHECK(document_kind(serialize_dimer(honeycomb_dimer())) == "dimer");
    CHECK_THROWS_AS(document_kind("{}"), ParseError);
}

TEST_CASE("genus and euler subcommands") {
    Run g = run({"genus", "4"});
    CHECK(g.code == 0);
    CHECK(g.out.find('3') != std::string::npos);
    Run e = run({"euler", "catalog:honeycomb"});
    CHECK(e.code == 0);
    CHECK(e.out.find("= 0") != std::string::npos);
}

TEST_CASE("random bytes never crash the parser or the cli") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<int> byte(0, 255), len(0, 200);
    std::string seed = serialize_dimer(honeycomb_dimer());
    for (int i = 0; i < 1000; ++i) {
        std::string s;
        if (i % 2 == 0) {
            int n = len(rng);
            for (int k = 0; k < n; ++k) s += static_cast<char>(byte(rng));
        } else {
            s = seed;
            std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
            for (int k = 0; k < 3; ++k) s[pos(rng)] = static_cast<char>(byte(rng));
        }
        try {
            parse_dimer(s);
        } catch (const ParseError&) {
        }
        if (i % 10 == 0) {
            std::string path = temp_file("fuzz.json", s);
            int code = run({"validate", path}).code;
            CHECK((code == 0 || code == 1 || code == 2));
        }
    }
}
