#include "tropdimer/almost_toric.hpp"
#include "tropdimer/errors.hpp"
#include "tropdimer/mutation.hpp"

namespace tropdimer {

namespace {

struct Entry {
    const char* name;
    std::vector<std::pair<int, int>> reflexive;  // vertices before scaling by 4
    std::vector<std::pair<int, int>> offsets;    // seed line offsets as num/den, one per corner
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {"cp2", {{-1, -1}, {2, -1}, {-1, 2}}, {{1, 7}, {5, 7}, {5, 7}}},
        {"p1p1", {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, {{1, 7}, {5, 7}, {5, 7}, {6, 7}}},
        {"bl1", {{-1, -1}, {2, -1}, {0, 1}, {-1, 1}}, {{1, 7}, {0, 1}, {0, 1}, {6, 7}}},
        {"bl2", {{-1, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 1}}, {{1, 7}, {0, 1}, {4, 7}, {1, 7}, {6, 7}}},
        {"bl3", {{-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}}, {{3, 7}, {2, 7}, {3, 7}, {3, 7}, {3, 7}, {3, 7}}},
    };
    return e;
}

}  // namespace

const std::vector<std::string>& del_pezzo_names() {
    static const std::vector<std::string> names = {"cp2", "p1p1", "bl1", "bl2", "bl3"};
    return names;
}

DelPezzo del_pezzo(const std::string& name) {
    for (const auto& e : entries()) {
        if (name != e.name) continue;
        DelPezzo dp;
        dp.name = e.name;
        std::vector<Vec2> pts;
        for (auto [x, y] : e.reflexive) pts.push_back(Vec2(4 * x, 4 * y));
        dp.polygon = RatPolygon::from_vertices(pts);
        for (const auto& s : dp.polygon.edges()) dp.fan.push_back(primitive_direction(rot90(s.b - s.a)));
        dp.traded = trade_all(dp.polygon);
        auto classes = seed_directions(dp.polygon);
        for (std::size_t i = 0; i < classes.size(); ++i)
            dp.seed_lines.push_back({classes[i], make_rat(e.offsets[i].first, e.offsets[i].second)});
        dp.seed = dimer_from_lines(dp.seed_lines);
        return dp;
    }
    throw DomainError("unknown del Pezzo '" + name + "'");
}

std::vector<DelPezzo> del_pezzo_catalog() {
    std::vector<DelPezzo> out;
    for (const auto& n : del_pezzo_names()) out.push_back(del_pezzo(n));
    return out;
}

std::vector<H1Class> x3333_classes() { return {{1, 0}, {0, 1}, {-1, 1}, {1, 1}}; }

}  // namespace tropdimer
