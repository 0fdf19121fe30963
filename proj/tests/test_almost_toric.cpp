#include <doctest.h>

#include "support.hpp"

using namespace tropdimer;

static Rat q(long long n, long long d = 1) { return make_rat(n, d); }

TEST_CASE("cut monodromy fixes the eigenray") {
    for (const Vec2& e : {Vec2(1, 1), Vec2(1, 0), Vec2(2, -1)}) {
        UnimodularMap m = cut_monodromy(e, 1);
        CHECK(m.apply(e) == e);
        CHECK(m.det() == 1);
        Vec2 x(3, -2);
        CHECK(m.apply(x) == x + e * cross(e, x));
    }
    UnimodularMap m2 = cut_monodromy(Vec2(1, 1), 2);
    CHECK(m2.apply(Vec2(1, 0)) == Vec2(1, 0) + Vec2(1, 1) * (-2));
}

TEST_CASE("nodal trade of CP2 gives three nodes and an affine circle") {
    DelPezzo cp2 = del_pezzo("cp2");
    BaseDiagram d = trade_all(cp2.polygon);
    CHECK(d.nodes.size() == 3);
    CHECK(d.cuts.size() == 3);
    CHECK(d.affine_circle());
    const auto& vs = cp2.polygon.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int n = d.node_at_corner(static_cast<int>(i));
        REQUIRE(n >= 0);
        CHECK(d.nodes[n].position == vs[i] + d.nodes[n].eigenray * 2);
        CHECK(cp2.polygon.contains_interior(d.nodes[n].position));
        CHECK(d.cuts[n].direction == -d.nodes[n].eigenray);
    }
    CHECK_THROWS_AS(nodal_trade(d, 0), DomainError);
    BaseDiagram partial = nodal_trade(toric_diagram(cp2.polygon), 1);
    CHECK(partial.nodes.size() == 1);
    CHECK_FALSE(partial.affine_circle());
}

TEST_CASE("nodal trade of P1xP1 gives four nodes") {
    BaseDiagram d = trade_all(del_pezzo("p1p1").polygon);
    CHECK(d.nodes.size() == 4);
    CHECK(d.affine_circle());
}

TEST_CASE("outer and inner tori are balanced and admissible") {
    std::map<std::string, std::size_t> inner_vertices{{"cp2", 3}, {"p1p1", 4}, {"bl3", 6}};
    for (const auto& dp : del_pezzo_catalog()) {
        CurveOnBase outer = build_outer_torus(dp.traded);
        CurveOnBase inner = build_inner_torus(dp.traded);
        CHECK_MESSAGE(balanced_on_base(outer, dp.traded), dp.name);
        CHECK_MESSAGE(admissible(outer, dp.traded), dp.name);
        CHECK_MESSAGE(balanced_on_base(inner, dp.traded), dp.name);
        CHECK_MESSAGE(admissible(inner, dp.traded), dp.name);
        CHECK(outer.attachments.empty());
        CHECK(inner.attachments.size() == dp.traded.nodes.size());
        if (inner_vertices.count(dp.name)) CHECK(inner.curve.vertices.size() == inner_vertices[dp.name]);
    }
}

TEST_CASE("torus parameters out of range") {
    BaseDiagram d = del_pezzo("cp2").traded;
    CHECK_THROWS_AS(build_outer_torus(d, 3), DomainError);
    CHECK_THROWS_AS(build_outer_torus(d, 0), DomainError);
}

TEST_CASE("a segment straight through a node is not admissible") {
    BaseDiagram d = del_pezzo("cp2").traded;
    const Node& n = d.nodes[0];
    Vec2 side(-n.eigenray.y, n.eigenray.x);
    CurveOnBase c;
    int a = c.curve.add_vertex(n.position - side * q(1, 2));
    int b = c.curve.add_vertex(n.position + side * q(1, 2));
    c.curve.add_segment(a, b);
    CHECK_FALSE(admissible(c, d));
}

TEST_CASE("local exchange turns the bent line into the pants and back") {
    BaseDiagram d = local_model_diagram();
    CurveOnBase line = local_line_curve(), pants = local_pants_curve();
    CHECK(admissible(line, d));
    CHECK(admissible(pants, d));
    CHECK(balanced_on_base(line, d));
    CHECK(balanced_on_base(pants, d));
    CHECK(same_curve(nodal_trade_exchange(line, d, 0), pants));
    CHECK(same_curve(nodal_trade_exchange(pants, d, 0), line));
    CHECK(same_curve(nodal_trade_exchange(line, d, 0, ExchangeDirection::Forward), pants));
    CHECK_THROWS_AS(nodal_trade_exchange(line, d, 0, ExchangeDirection::Inverse), DomainError);
}

TEST_CASE("exchange at every node of a del Pezzo outer torus") {
    for (const auto& dp : del_pezzo_catalog()) {
        CurveOnBase outer = build_outer_torus(dp.traded);
        std::vector<int> all;
        for (int i = 0; i < static_cast<int>(dp.traded.nodes.size()); ++i) all.push_back(i);
        CurveOnBase ex = nodal_trade_exchange(outer, dp.traded, all);
        CHECK_MESSAGE(balanced_on_base(ex, dp.traded), dp.name);
        CHECK_MESSAGE(admissible(ex, dp.traded), dp.name);
        CHECK(ex.attachments.size() == all.size());
        CHECK_MESSAGE(same_curve(nodal_trade_exchange(ex, dp.traded, all), outer), dp.name);
        if (dp.name == "cp2") CHECK(same_curve(ex, build_inner_torus(dp.traded)));
    }
}

TEST_CASE("single-node exchange stays admissible") {
    DelPezzo cp2 = del_pezzo("cp2");
    CurveOnBase outer = build_outer_torus(cp2.traded);
    for (int i = 0; i < 3; ++i) {
        CurveOnBase ex = nodal_trade_exchange(outer, cp2.traded, i);
        CHECK(admissible(ex, cp2.traded));
        CHECK(ex.attachments.size() == 1);
        CHECK(same_curve(nodal_trade_exchange(ex, cp2.traded, i), outer));
    }
}

TEST_CASE("curve signature ignores vertex and edge order") {
    CurveOnBase a = local_pants_curve();
    CurveOnBase b;
    std::vector<int> ids;
    for (auto it = a.curve.vertices.rbegin(); it != a.curve.vertices.rend(); ++it) ids.push_back(b.curve.add_vertex(*it));
    std::reverse(ids.begin(), ids.end());
    for (auto it = a.curve.edges.rbegin(); it != a.curve.edges.rend(); ++it) {
        CurveEdge e = *it;
        e.from = ids[e.from];
        if (e.to >= 0) e.to = ids[e.to];
        b.curve.edges.push_back(e);
    }
    int n = static_cast<int>(a.curve.edges.size());
    for (const auto& [e, node] : a.attachments) b.attachments.push_back({n - 1 - e, node});
    CHECK(same_curve(a, b));
    CHECK_FALSE(same_curve(a, local_line_curve()));
}

TEST_CASE("A_n chains") {
    for (int n = 1; n <= 5; ++n) {
        AnChain c = an_chain_curve(n);
        CHECK(c.diagram.nodes.size() == static_cast<std::size_t>(n));
        CHECK(c.curve.attachments.size() == static_cast<std::size_t>(n));
        CHECK(balanced_on_base(c.curve, c.diagram));
        CHECK(admissible(c.curve, c.diagram));
        for (const auto& node : c.diagram.nodes) CHECK(node.eigenray == Vec2(1, 1));
    }
    CHECK_THROWS_AS(an_chain_curve(0), DomainError);
}

TEST_CASE("two-chart section example and nonexample") {
    CHECK(validate_section(two_chart_example()));
    SectionReport bad = check_section(two_chart_nonexample());
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.problems.empty());
}

TEST_CASE("a single global polynomial is a section") {
    ChartedSection s;
    Chart c;
    c.region = RatPolygon::from_vertices({Vec2(-2, -2), Vec2(2, -2), Vec2(2, 2), Vec2(-2, 2)});
    c.phi = TropicalPolynomial({{Vec2(0, 0), 0}, {Vec2(1, 0), 0}, {Vec2(0, 1), 0}});
    s.charts.push_back(c);
    CHECK(validate_section(s));
}

TEST_CASE("section validity is unimodular invariant") {
    std::mt19937_64 rng(131);
    for (int i = 0; i < 6; ++i) {
        UnimodularMap g = oracle::random_sl2(rng);
        CHECK(validate_section(two_chart_example().transformed(g)));
        CHECK_FALSE(validate_section(two_chart_nonexample().transformed(g)));
    }
}

TEST_CASE("x3333 classes") {
    auto cs = x3333_classes();
    REQUIRE(cs.size() == 4);
    std::multiset<H1Class> expected{{1, 0}, {0, 1}, {-1, 1}, {1, 1}};
    CHECK(std::multiset<H1Class>(cs.begin(), cs.end()) == expected);
    CHECK(intersection_number({1, 1}, {1, -1}) == 2);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK(std::abs(intersection_number(cs[i], cs[j])) >= 1);
}

TEST_CASE("del Pezzo catalog") {
    CHECK(del_pezzo_names().size() == 5);
    for (const auto& dp : del_pezzo_catalog()) {
        CHECK(validate(dp.seed).ok());
        CHECK_FALSE(validate(dp.seed).self_intersecting);
        CHECK(dp.fan.size() == dp.polygon.size());
        CHECK(dp.traded.affine_circle());
    }
    CHECK_THROWS_AS(del_pezzo("dp9"), DomainError);
}
