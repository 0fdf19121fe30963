#include <doctest.h>

#include "support.hpp"
#include "tropdimer/lattice_geom.hpp"

using namespace tropdimer;

static Rat q(long long n, long long d = 1) { return make_rat(n, d); }

TEST_CASE("reduce_mod_lattice examples") {
    CHECK(reduce_mod_lattice(Vec2(q(7, 6), q(-1, 6))).coords == Vec2(q(1, 6), q(5, 6)));
    CHECK(reduce_mod_lattice(Vec2(0, 0)).coords == Vec2(0, 0));
    CHECK(reduce_mod_lattice(Vec2(q(6, 6), q(6, 6))).coords == Vec2(0, 0));
    CHECK(congruent_mod_lattice(Vec2(q(1, 3), 2), Vec2(q(-2, 3), -5)));
    CHECK_FALSE(congruent_mod_lattice(Vec2(q(1, 3), 0), Vec2(q(1, 2), 0)));
}

TEST_CASE("reduce_mod_lattice is idempotent and lands in the unit square") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> n(-500, 500), d(1, 40);
    for (int i = 0; i < 200; ++i) {
        Vec2 p(q(n(rng), d(rng)), q(n(rng), d(rng)));
        TorusPoint r = reduce_mod_lattice(p);
        CHECK(reduce_mod_lattice(r.coords) == r);
        CHECK(r.coords.x >= 0);
        CHECK(r.coords.x < 1);
        CHECK(r.coords.y >= 0);
        CHECK(r.coords.y < 1);
        CHECK((p - r.coords).is_integral());
    }
}

TEST_CASE("convex_hull examples") {
    RatPolygon t = convex_hull({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1), Vec2(q(1, 3), q(1, 3))});
    CHECK(t == RatPolygon::from_vertices({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)}));
    RatPolygon p = convex_hull({Vec2(0, 0)});
    CHECK(p.is_point());
    CHECK_THROWS_AS(convex_hull({}), DomainError);
}

TEST_CASE("hull of the three white honeycomb triangles is one large triangle") {
    DualDimer h = honeycomb_dimer();
    std::vector<Vec2> pts;
    for (int i : h.indices_of(Color::White))
        for (const auto& v : h.polytopes[i].polygon.vertices()) pts.push_back(v);
    RatPolygon hull = convex_hull(pts);
    CHECK(hull.size() == 3);
    // vertices of the three stored lifts (0,3),(3,0),(6,6) over 6
    CHECK(hull == RatPolygon::from_vertices({Vec2(0, q(1, 2)), Vec2(q(1, 2), 0), Vec2(1, 1)}));
}

TEST_CASE("convex_hull is idempotent and permutation invariant") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> n(-20, 20);
    for (int i = 0; i < 100; ++i) {
        std::vector<Vec2> pts;
        int k = 3 + static_cast<int>(rng() % 8);
        for (int j = 0; j < k; ++j) pts.push_back(Vec2(q(n(rng), 3), q(n(rng), 2)));
        RatPolygon h = convex_hull(pts);
        CHECK(convex_hull(h.vertices()) == h);
        std::shuffle(pts.begin(), pts.end(), rng);
        CHECK(convex_hull(pts) == h);
        for (const auto& p : pts) CHECK(h.contains(p));
    }
}

TEST_CASE("intersection_number examples") {
    CHECK(intersection_number({1, 0}, {0, 1}) == 1);
    CHECK(intersection_number({3, -7}, {3, -7}) == 0);
    CHECK(intersection_number({1, 1}, {1, -1}) == 2);
}

TEST_CASE("intersection_number is symmetric and unimodular invariant") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> n(-9, 9);
    for (int i = 0; i < 200; ++i) {
        H1Class a{n(rng), n(rng)}, b{n(rng), n(rng)};
        UnimodularMap m = oracle::random_sl2(rng, 5);
        CHECK(intersection_number(a, b) == intersection_number(b, a));
        CHECK(intersection_number(m.apply(a), m.apply(b)) == intersection_number(a, b));
    }
}

TEST_CASE("interior_lattice_points examples") {
    CHECK(interior_lattice_points(dilated_unit_triangle(1)).empty());
    auto three = interior_lattice_points(dilated_unit_triangle(3));
    REQUIRE(three.size() == 1);
    CHECK(three[0] == std::array<long long, 2>{1, 1});
    CHECK(interior_lattice_points(dilated_unit_triangle(4)).size() == 3);
    CHECK_THROWS_AS(interior_lattice_points(RatPolygon::from_vertices({Vec2(0, 0), Vec2(q(1, 2), 0), Vec2(0, 1)})), DomainError);
}

TEST_CASE("interior point count of dilated triangles matches the scan oracle") {
    for (long long d = 1; d <= 12; ++d) {
        long long scan = oracle::count_interior_points({{0, 0}, {d, 0}, {0, d}});
        CHECK(static_cast<long long>(interior_lattice_points(dilated_unit_triangle(d)).size()) == scan);
        CHECK(scan == (d - 1) * (d - 2) / 2);
    }
}

TEST_CASE("interior points of random lattice polygons match the scan oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> n(-6, 6);
    for (int i = 0; i < 60; ++i) {
        std::vector<Vec2> pts;
        for (int j = 0; j < 6; ++j) pts.push_back(Vec2(n(rng), n(rng)));
        RatPolygon h = convex_hull(pts);
        if (h.degenerate()) continue;
        std::vector<std::array<long long, 2>> raw;
        for (const auto& v : h.vertices()) raw.push_back({to_ll(v.x), to_ll(v.y)});
        CHECK(static_cast<long long>(interior_lattice_points(h).size()) == oracle::count_interior_points(raw));
    }
}

TEST_CASE("primitive directions and lattice length") {
    CHECK(primitive_direction(Vec2(q(2, 6), q(4, 6))) == Vec2(1, 2));
    CHECK(primitive_direction(Vec2(-4, 6)) == Vec2(-2, 3));
    CHECK(lattice_length(Vec2(-4, 6)) == 2);
    CHECK(lattice_length(Vec2(q(1, 6), q(2, 6)), 6) == 1);
}

TEST_CASE("unimodular maps compose and invert") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        UnimodularMap a = oracle::random_sl2(rng), b = oracle::random_sl2(rng);
        a.t = Vec2(q(1, 3), q(-2, 5));
        Vec2 p(q(7, 4), q(-1, 9));
        CHECK(a.inverse().apply(a.apply(p)) == p);
        CHECK(a.compose(b).apply(p) == a.apply(b.apply(p)));
        CHECK(std::abs(a.det()) == 1);
    }
}

TEST_CASE("minkowski_sum equals the hull of pairwise sums") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> c(-12, 12), n(1, 7);
    for (int i = 0; i < 300; ++i) {
        auto random_poly = [&] {
            std::vector<Vec2> pts;
            long long k = n(rng);
            for (long long t = 0; t < k; ++t) pts.push_back(Vec2(make_rat(c(rng), 4), make_rat(c(rng), 3)));
            return convex_hull(pts);
        };
        RatPolygon a = random_poly(), b = random_poly();
        std::vector<Vec2> sums;
        for (const auto& v : a.vertices())
            for (const auto& w : b.vertices()) sums.push_back(v + w);
        CHECK(minkowski_sum(a, b) == convex_hull(sums));
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    }
}
