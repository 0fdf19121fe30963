#include "tropdimer/catalog.hpp"
#include "tropdimer/almost_toric.hpp"
#include "tropdimer/errors.hpp"
#include "tropdimer/io.hpp"
#include "tropdimer/mutation.hpp"

#include <algorithm>

namespace tropdimer {

namespace {

RatPolygon grid_polygon(std::initializer_list<std::pair<int, int>> pts, int n) {
    std::vector<Vec2> v;
    for (auto [x, y] : pts) v.push_back(Vec2(make_rat(x, n), make_rat(y, n)));
    return RatPolygon::from_vertices(v);
}

}  // namespace

DualDimer honeycomb_dimer() {
    DualDimer d;
    d.denominator = 6;
    d.polytopes = {
        {Color::White, grid_polygon({{6, 6}, {5, 4}, {4, 5}}, 6)},
        {Color::White, grid_polygon({{2, 4}, {0, 3}, {1, 2}}, 6)},
        {Color::White, grid_polygon({{4, 2}, {2, 1}, {3, 0}}, 6)},
        {Color::Black, grid_polygon({{0, 0}, {1, 2}, {2, 1}}, 6)},
        {Color::Black, grid_polygon({{2, 4}, {3, 6}, {4, 5}}, 6)},
        {Color::Black, grid_polygon({{4, 2}, {5, 4}, {6, 3}}, 6)},
    };
    return canonicalize(d);
}

DualDimer pants_dimer() {
    DualDimer d;
    d.denominator = 2;
    d.polytopes = {
        {Color::White, grid_polygon({{0, 0}, {1, 0}, {0, 1}}, 2)},
        {Color::Black, grid_polygon({{0, 0}, {-1, 0}, {0, -1}}, 2)},
    };
    return canonicalize(d);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"honeycomb", "pants-min", "cp2-seed", "p1p1-seed",
                                                   "bl1-seed",  "bl2-seed",  "bl3-seed", "immersed-hexagon"};
    return names;
}

DualDimer catalog_dimer(const std::string& name) {
    if (name == "honeycomb") return honeycomb_dimer();
    if (name == "pants-min") return pants_dimer();
    if (name == "immersed-hexagon") return canonicalize(mutate_face(honeycomb_dimer(), 1).dimer);
    const std::string suffix = "-seed";
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::string base = name.substr(0, name.size() - suffix.size());
        const auto& dp = del_pezzo_names();
        if (std::find(dp.begin(), dp.end(), base) != dp.end()) return canonicalize(del_pezzo(base).seed);
    }
    throw DomainError("unknown catalog entry '" + name + "'");
}

}  // namespace tropdimer
