#pragma once
// Independent oracles and generators shared by the test binaries.

#include "tropdimer/almost_toric.hpp"
#include "tropdimer/catalog.hpp"
#include "tropdimer/dimer.hpp"
#include "tropdimer/errors.hpp"
#include "tropdimer/kasteleyn.hpp"
#include "tropdimer/laurent.hpp"
#include "tropdimer/mutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using namespace tropdimer;

// Interior lattice points by scanning the bounding box with strict orientation tests.
inline long long count_interior_points(const std::vector<std::array<long long, 2>>& poly) {
    long long x0 = poly[0][0], x1 = x0, y0 = poly[0][1], y1 = y0;
    for (const auto& p : poly) {
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
    }
    long long area2 = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        area2 += a[0] * b[1] - a[1] * b[0];
    }
    long long sign = area2 > 0 ? 1 : -1;
    long long count = 0;
    for (long long x = x0; x <= x1; ++x)
        for (long long y = y0; y <= y1; ++y) {
            bool inside = true;
            for (std::size_t i = 0; i < poly.size() && inside; ++i) {
                const auto& a = poly[i];
                const auto& b = poly[(i + 1) % poly.size()];
                long long c = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
                if (c * sign <= 0) inside = false;
            }
            if (inside) ++count;
        }
    return count;
}

// Leibniz expansion over all permutations.
inline LaurentPolynomial leibniz_det(const std::vector<std::vector<LaurentPolynomial>>& m) {
    std::size_t n = m.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPolynomial total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        LaurentPolynomial term = LaurentPolynomial::constant(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Boltzmann monomials of all perfect matchings: for each bijection white -> black, every
// choice of one parallel edge per pair, weight z^(sum of displacements).
inline std::map<Vec2, long long> matching_monomials(const DimerGraph& g) {
    std::map<Vec2, long long> out;
    std::size_t n = g.whites.size();
    if (n != g.blacks.size()) return out;
    std::vector<std::vector<std::vector<Vec2>>> between(n, std::vector<std::vector<Vec2>>(n));
    for (const auto& e : g.edges) between[e.white][e.black].push_back(e.displacement);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Vec2> partial{Vec2(0, 0)};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Vec2> next;
            for (const auto& p : partial)
                for (const auto& v : between[i][perm[i]]) next.push_back(p + v);
            partial.swap(next);
        }
        for (const auto& p : partial) out[p] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline long long matching_count(const DimerGraph& g) {
    long long c = 0;
    for (const auto& [e, k] : matching_monomials(g)) c += k;
    return c;
}

inline UnimodularMap random_sl2(std::mt19937_64& rng, int steps = 4) {
    UnimodularMap m;
    std::uniform_int_distribution<int> pick(0, 3);
    const UnimodularMap gens[4] = {UnimodularMap::linear(1, 1, 0, 1), UnimodularMap::linear(1, 0, 1, 1),
                                   UnimodularMap::linear(1, -1, 0, 1), UnimodularMap::linear(0, -1, 1, 0)};
    for (int i = 0; i < steps; ++i) m = gens[pick(rng)].compose(m);
    return m;
}

// Valid dimers from random line arrangements: images of catalog line classes under random
// SL2 maps, with random offsets. Non-generic draws are skipped.
inline std::vector<DualDimer> generate_fuzzed_dimers(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<H1Class>> shapes;
    for (const auto& dp : del_pezzo_catalog()) {
        std::vector<H1Class> cls;
        for (const auto& l : dp.seed_lines) cls.push_back(l.cls);
        shapes.push_back(cls);
    }
    std::vector<DualDimer> out;
    std::uniform_int_distribution<int> off(0, 12);
    int attempts = 0;
    while (out.size() < count && attempts < 20000) {
        ++attempts;
        const auto& shape = shapes[rng() % shapes.size()];
        UnimodularMap m = random_sl2(rng, 1 + static_cast<int>(rng() % 3));
        std::vector<GeodesicLine> lines;
        for (const auto& c : shape) lines.push_back({m.apply(c), Rat(off(rng), 13)});
        try {
            DualDimer d = dimer_from_lines(lines);
            if (validate(d).ok()) out.push_back(d);
        } catch (const DomainError&) {
        }
    }
    return out;
}

// Cached per (count, seed) so one test binary generates each set once.
inline const std::vector<DualDimer>& fuzzed_dimers(std::size_t count, std::uint64_t seed) {
    static std::map<std::pair<std::size_t, std::uint64_t>, std::vector<DualDimer>> cache;
    auto key = std::make_pair(count, seed);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, generate_fuzzed_dimers(count, seed)).first;
    return it->second;
}

}  // namespace oracle
