#include <doctest.h>

#include "support.hpp"

using namespace tropdimer;

static Rat q(long long n, long long d = 1) { return make_rat(n, d); }

static Polytope tri(Color c, long long n, std::array<std::array<long long, 2>, 3> v) {
    std::vector<Vec2> pts;
    for (const auto& p : v) pts.push_back(Vec2(q(p[0], n), q(p[1], n)));
    return {c, RatPolygon::from_vertices(pts)};
}

static DualDimer t_shaped_pair() {
    DualDimer d;
    d.denominator = 2;
    d.polytopes = {tri(Color::White, 2, {{{1, 0}, {0, 1}, {-1, -1}}}), tri(Color::Black, 2, {{{-1, 0}, {0, -1}, {1, 1}}})};
    return d;
}

static std::multiset<H1Class> zigzag_classes(const DualDimer& d) {
    std::multiset<H1Class> out;
    for (const auto& z : zigzag_paths(d)) out.insert(z.cls);
    return out;
}

TEST_CASE("honeycomb validates without self-intersections") {
    ValidationReport r = validate(honeycomb_dimer());
    CHECK(r.ok());
    CHECK_FALSE(r.self_intersecting);
    for (const auto& a : r.axioms) CHECK(a.passed);
}

TEST_CASE("moving one white triangle breaks vertex matching") {
    DualDimer d = honeycomb_dimer();
    int w = d.indices_of(Color::White)[0];
    d.polytopes[w].polygon = d.polytopes[w].polygon.translated(Vec2(q(1, 12), 0));
    ValidationReport r = validate(d);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.axiom("vertex-matching").passed);
    CHECK_THROWS_AS(require_valid(d), DomainError);
}

TEST_CASE("two large triangles overlapping at a hexagon validate as immersed") {
    DualDimer d = catalog_dimer("immersed-hexagon");
    ValidationReport r = validate(d);
    CHECK(r.ok());
    CHECK(r.self_intersecting);
    CHECK_THROWS_WITH_AS(faces(d), "faces undefined for immersed dimer", DomainError);
    DimerGraph g = build_graph(d);
    CHECK(g.whites.size() == 1);
    CHECK(g.blacks.size() == 1);
    // hull vertices only: the six old shared points lie on edges
    CHECK(g.edges.size() == 3);
}

TEST_CASE("honeycomb graph") {
    DualDimer d = honeycomb_dimer();
    DimerGraph g = build_graph(d);
    CHECK(g.whites.size() + g.blacks.size() == 6);
    CHECK(g.edges.size() == 9);
}

TEST_CASE("graph edges join one white and one black vertex at their anchor") {
    std::vector<DualDimer> ds;
    for (const auto& n : catalog_names()) ds.push_back(catalog_dimer(n));
    for (const auto& d : oracle::fuzzed_dimers(100, 7)) ds.push_back(d);
    for (const auto& d : ds) {
        DimerGraph g = build_graph(d);
        for (const auto& e : g.edges) {
            const Polytope& w = d.polytopes[g.whites[e.white]];
            const Polytope& b = d.polytopes[g.blacks[e.black]];
            CHECK(w.color == Color::White);
            CHECK(b.color == Color::Black);
            CHECK(w.polygon[e.white_vertex] == e.white_lift);
            CHECK(b.polygon[e.black_vertex] == e.black_lift);
            CHECK(reduce_mod_lattice(e.white_lift) == e.anchor);
            CHECK(reduce_mod_lattice(e.black_lift) == e.anchor);
        }
    }
}

TEST_CASE("minimal pair of pants") {
    DualDimer d = pants_dimer();
    CHECK(validate(d).ok());
    CHECK_FALSE(validate(d).self_intersecting);
    DimerGraph g = build_graph(d);
    CHECK(g.whites.size() == 1);
    CHECK(g.blacks.size() == 1);
    CHECK(g.edges.size() == 3);
    auto zs = zigzag_paths(d);
    REQUIRE(zs.size() == 3);
    H1Class sum;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        sum = sum + zs[i].cls;
        for (std::size_t j = i + 1; j < zs.size(); ++j) CHECK(intersection_number(zs[i].cls, zs[j].cls) != 0);
    }
    CHECK(sum.is_zero());
    CHECK(faces(d).size() == 1);
}

TEST_CASE("honeycomb zigzags and faces") {
    DualDimer d = honeycomb_dimer();
    std::multiset<H1Class> expect{{1, -1}, {1, 2}, {-2, -1}};
    CHECK(zigzag_classes(d) == expect);
    auto fs = faces(d);
    CHECK(fs.size() == 3);
    for (const auto& f : fs) CHECK(f.graph_edges.size() == 6);
}

TEST_CASE("zigzag classes do not depend on polytope order") {
    std::mt19937_64 rng(43);
    for (const auto& n : catalog_names()) {
        DualDimer d = catalog_dimer(n);
        auto before = zigzag_classes(d);
        for (int k = 0; k < 3; ++k) {
            std::shuffle(d.polytopes.begin(), d.polytopes.end(), rng);
            CHECK(zigzag_classes(d) == before);
        }
    }
}

TEST_CASE("zigzag classes sum to zero on the catalog and on fuzzed dimers") {
    for (const auto& n : catalog_names()) {
        H1Class sum;
        for (const auto& z : zigzag_paths(catalog_dimer(n))) sum = sum + z.cls;
        CHECK_MESSAGE(sum.is_zero(), n);
    }
    auto fuzz = oracle::fuzzed_dimers(100, 7);
    REQUIRE(fuzz.size() == 100);
    for (const auto& d : fuzz) {
        H1Class sum;
        for (const auto& z : zigzag_paths(d)) sum = sum + z.cls;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("torus Euler count for embedded dimers") {
    std::vector<DualDimer> ds;
    for (const auto& n : catalog_names()) ds.push_back(catalog_dimer(n));
    const auto& fuzz = oracle::fuzzed_dimers(100, 7);
    ds.insert(ds.end(), fuzz.begin(), fuzz.begin() + 30);
    for (const auto& d : ds) {
        if (validate(d).self_intersecting) continue;
        DimerGraph g = build_graph(d);
        long long v = static_cast<long long>(g.whites.size() + g.blacks.size());
        long long e = static_cast<long long>(g.edges.size());
        long long f = static_cast<long long>(faces(d, g).size());
        CHECK(v - e + f == 0);
    }
}

TEST_CASE("honeycomb fan has three legs of multiplicity three") {
    TropicalCurve fan = dimer_to_tropical_fan(honeycomb_dimer());
    std::vector<std::pair<Vec2, long long>> expect{{Vec2(-1, -1), 3}, {Vec2(-1, 2), 3}, {Vec2(2, -1), 3}};
    CHECK(fan_rays(fan) == expect);
    CHECK(check_balancing(fan));
}

TEST_CASE("single pair dimers reproduce the locus of their dual function") {
    for (const DualDimer& d : {pants_dimer(), t_shaped_pair()}) {
        CHECK(validate(d).ok());
        const RatPolygon& w = d.polytopes[d.indices_of(Color::White)[0]].polygon;
        const RatPolygon& b = d.polytopes[d.indices_of(Color::Black)[0]].polygon;
        TropicalCurve fan = dimer_to_tropical_fan(d);
        CHECK(fan_equal(fan, nonlinearity_locus(dual_function(w, Color::White))));
        CHECK(fan_equal(fan, nonlinearity_locus(dual_function(b, Color::Black))));
    }
}

TEST_CASE("T-shaped pair fan is the locus of x1 + x2 + (x1x2)^-1") {
    DualDimer d = t_shaped_pair();
    TropicalPolynomial phi({{Vec2(1, 0), 0}, {Vec2(0, 1), 0}, {Vec2(-1, -1), 0}});
    CHECK(fan_equal(dimer_to_tropical_fan(d), nonlinearity_locus(phi)));
    // a lone pair with this Newton triangle cannot be embedded
    CHECK(validate(d).self_intersecting);
}

TEST_CASE("honeycomb dual functions share the dimer fan directions") {
    DualDimer d = honeycomb_dimer();
    TropicalCurve fan = dimer_to_tropical_fan(d);
    for (const auto& p : d.polytopes) {
        auto rays = fan_rays(nonlinearity_locus(dual_function(p.polygon, p.color)));
        REQUIRE(rays.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(rays[i].first == fan_rays(fan)[i].first);
    }
}

TEST_CASE("fans are balanced and follow unimodular maps") {
    std::mt19937_64 rng(53);
    std::vector<DualDimer> ds;
    for (const auto& n : catalog_names()) ds.push_back(catalog_dimer(n));
    auto fuzz = oracle::fuzzed_dimers(100, 7);
    REQUIRE(fuzz.size() == 100);
    for (const auto& d : fuzz) ds.push_back(d);
    for (const auto& d : ds) {
        TropicalCurve fan = dimer_to_tropical_fan(d);
        CHECK(check_balancing(fan));
    }
    for (std::size_t i = 0; i < 8; ++i) {
        UnimodularMap m = oracle::random_sl2(rng);
        DualDimer moved = ds[i].transformed(m);
        REQUIRE(validate(moved).ok());
        std::vector<std::pair<Vec2, long long>> expect;
        for (const auto& [r, k] : fan_rays(dimer_to_tropical_fan(ds[i]))) expect.push_back({m.dual().apply_linear(r), k});
        std::sort(expect.begin(), expect.end());
        CHECK(fan_rays(dimer_to_tropical_fan(moved)) == expect);
    }
}

TEST_CASE("dimer_from_lines builds the requested zigzags") {
    std::vector<GeodesicLine> lines{{{1, 0}, q(1, 7)}, {{0, 1}, q(5, 7)}, {{-1, -1}, q(5, 7)}};
    DualDimer d = dimer_from_lines(lines);
    CHECK(validate(d).ok());
    std::multiset<H1Class> expect{{1, 0}, {0, 1}, {-1, -1}};
    CHECK(zigzag_classes(d) == expect);
}

TEST_CASE("self-intersection agrees with a brute-force overlap scan") {
    std::vector<DualDimer> ds;
    for (const auto& n : catalog_names()) ds.push_back(catalog_dimer(n));
    DualDimer h = honeycomb_dimer();
    for (int i = 0; i < 3; ++i) ds.push_back(mutate_face(h, i).dimer);
    ds.push_back(mutate_face(pants_dimer(), 0).dimer);
    const auto& fuzz = oracle::fuzzed_dimers(100, 7);
    ds.insert(ds.end(), fuzz.begin(), fuzz.begin() + 20);
    for (const auto& d : ds) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < d.polytopes.size(); ++i)
            for (std::size_t j = i; j < d.polytopes.size(); ++j)
                for (long long kx = -3; kx <= 3; ++kx)
                    for (long long ky = -3; ky <= 3; ++ky) {
                        if (i == j && kx == 0 && ky == 0) continue;
                        if (interiors_overlap(d.polytopes[i].polygon, d.polytopes[j].polygon.translated(Vec2(kx, ky)))) ++hits;
                    }
        ValidationReport rep = validate(d);
        CHECK(rep.overlaps.size() == hits);
        CHECK(rep.self_intersecting == (hits > 0));
    }
}
