#include "tropdimer/kasteleyn.hpp"
#include "tropdimer/errors.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>

namespace tropdimer {

Gauge Gauge::parse(const std::string& text) {
    Gauge g;
    if (text == "paper") return g;
    if (text == "trivial") {
        g.kind = Kind::Trivial;
        return g;
    }
    const std::string prefix = "random:";
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
        std::string digits = text.substr(prefix.size());
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() <= 19) {
            g.kind = Kind::Random;
            g.seed = std::stoull(digits);
            return g;
        }
    }
    throw ParseError("unknown gauge '" + text + "' (expected paper, trivial or random:<seed>)");
}

std::string Gauge::str() const {
    switch (kind) {
        case Kind::Paper: return "paper";
        case Kind::Trivial: return "trivial";
        case Kind::Random: return "random:" + std::to_string(seed);
    }
    return "";
}

std::vector<int> kasteleyn_signs(const DualDimer& d, const DimerGraph& g) {
    std::size_t ne = g.edges.size();
    std::vector<int> signs(ne, 1);
    std::vector<DimerFace> fs;
    try {
        fs = faces(d, g);
    } catch (const DomainError&) {
        return signs;
    }
    // rows: bit per edge plus right-hand side in the last slot
    std::vector<std::vector<char>> rows;
    for (const auto& f : fs) {
        std::vector<char> r(ne + 1, 0);
        for (int e : f.graph_edges) r[e] ^= 1;
        long long k = static_cast<long long>(f.graph_edges.size()) / 2;
        r[ne] = static_cast<char>((k + 1) % 2);
        rows.push_back(std::move(r));
    }
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ne && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = 0; k <= ne; ++k) rows[r][k] ^= rows[rank][k];
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][ne]) return signs;  // inconsistent
    for (std::size_t r = 0; r < rank; ++r)
        if (rows[r][ne]) signs[pivot_col[r]] = -1;
    return signs;
}

namespace {

LaurentPolynomial raw_monomial(const DimerGraph& g, int edge) {
    return LaurentPolynomial::monomial(g.edges[edge].displacement);
}

// Exponent of the term used to fix signs: the origin when present, else the smallest.
Vec2 constant_candidate(const LaurentPolynomial& p) {
    if (p.coefficient(Vec2(0, 0)) != 0) return Vec2(0, 0);
    return p.terms().begin()->first;
}

struct GaugeFactors {
    std::vector<LaurentPolynomial> row, col;
};

GaugeFactors random_factors(const DimerGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> exp(-2, 2), sign(0, 1);
    auto draw = [&] {
        long long a = exp(rng), b = exp(rng);
        return LaurentPolynomial::monomial(Vec2(a, b), sign(rng) ? 1 : -1);
    };
    GaugeFactors f;
    for (std::size_t i = 0; i < g.whites.size(); ++i) f.row.push_back(draw());
    for (std::size_t j = 0; j < g.blacks.size(); ++j) f.col.push_back(draw());
    return f;
}

KasteleynMatrix assemble(const DimerGraph& g, const std::vector<LaurentPolynomial>& mono) {
    KasteleynMatrix m;
    m.rows = g.whites;
    m.cols = g.blacks;
    m.entries.assign(g.whites.size(), std::vector<LaurentPolynomial>(g.blacks.size()));
    for (std::size_t e = 0; e < g.edges.size(); ++e) m.entries[g.edges[e].white][g.edges[e].black] += mono[e];
    return m;
}

std::vector<LaurentPolynomial> signed_monomials(const DualDimer& d, const DimerGraph& g) {
    auto signs = kasteleyn_signs(d, g);
    std::vector<LaurentPolynomial> mono;
    for (std::size_t e = 0; e < g.edges.size(); ++e) mono.push_back(raw_monomial(g, static_cast<int>(e)).scaled(signs[e]));
    if (!g.whites.empty() && g.whites.size() == g.blacks.size()) {
        LaurentPolynomial det = determinant(assemble(g, mono));
        if (!det.is_zero() && det.coefficient(constant_candidate(det)) < 0)
            for (std::size_t e = 0; e < g.edges.size(); ++e)
                if (g.edges[e].white == 0) mono[e] = -mono[e];
    }
    return mono;
}

}  // namespace

LaurentPolynomial edge_monomial(const DualDimer& d, const DimerGraph& g, int edge, const Gauge& gauge) {
    if (edge < 0 || static_cast<std::size_t>(edge) >= g.edges.size()) throw DomainError("edge index out of range");
    if (gauge.kind == Gauge::Kind::Trivial) return raw_monomial(g, edge);
    LaurentPolynomial m = signed_monomials(d, g)[edge];
    if (gauge.kind == Gauge::Kind::Random) {
        auto f = random_factors(g, gauge.seed);
        m = f.row[g.edges[edge].white] * m * f.col[g.edges[edge].black];
    }
    return m;
}

KasteleynMatrix kasteleyn_matrix(const DualDimer& d, const Gauge& gauge) {
    require_valid(d);
    DimerGraph g = build_graph(d);
    std::vector<LaurentPolynomial> mono;
    if (gauge.kind == Gauge::Kind::Trivial) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) mono.push_back(raw_monomial(g, static_cast<int>(e)));
    } else {
        mono = signed_monomials(d, g);
    }
    KasteleynMatrix m = assemble(g, mono);
    if (gauge.kind == Gauge::Kind::Random) {
        auto f = random_factors(g, gauge.seed);
        for (std::size_t i = 0; i < m.entries.size(); ++i)
            for (std::size_t j = 0; j < m.entries[i].size(); ++j) m.entries[i][j] = f.row[i] * m.entries[i][j] * f.col[j];
    }
    return m;
}

LaurentPolynomial determinant(const KasteleynMatrix& m) {
    if (!m.square()) return {};
    return determinant(m.entries);
}

LaurentPolynomial determinant(const std::vector<std::vector<LaurentPolynomial>>& m) {
    std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) return {};
    if (n == 0) return LaurentPolynomial::constant(1);
    if (n > 63) throw DomainError("matrix too large for exact determinant");
    std::map<std::uint64_t, LaurentPolynomial> layer{{0, LaurentPolynomial::constant(1)}};
    for (std::size_t r = 0; r < n; ++r) {
        std::map<std::uint64_t, LaurentPolynomial> next;
        for (const auto& [mask, val] : layer)
            for (std::size_t c = 0; c < n; ++c) {
                std::uint64_t bit = std::uint64_t(1) << c;
                if ((mask & bit) || m[r][c].is_zero()) continue;
                int above = std::popcount(mask >> (c + 1));
                LaurentPolynomial t = val * m[r][c];
                if (above % 2) t = -t;
                auto& slot = next[mask | bit];
                slot += t;
            }
        layer.clear();
        for (auto& [mask, val] : next)
            if (!val.is_zero()) layer.emplace(mask, std::move(val));
        if (layer.empty()) return {};
    }
    return layer.begin()->second;
}

LaurentPolynomial normalize_determinant(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    std::vector<Vec2> pts;
    for (const auto& [e, c] : p.terms()) pts.push_back(e);
    RatPolygon hull = convex_hull(pts);
    Vec2 centre(0, 0);
    for (const auto& v : hull.vertices()) centre += v;
    centre = centre / Rat(static_cast<long long>(hull.size()));
    LaurentPolynomial q = p.shifted(-centre);
    if (q.coefficient(constant_candidate(q)) < 0) q = -q;
    return q;
}

std::vector<Matching> enumerate_matchings(const DualDimer& d, const DimerGraph& g) {
    (void)d;
    std::vector<Matching> out;
    std::size_t n = g.whites.size();
    if (n != g.blacks.size()) return out;
    std::vector<std::vector<int>> by_white(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) by_white[g.edges[e].white].push_back(static_cast<int>(e));
    std::vector<char> used(n, 0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t w) -> void {
        if (w == n) {
            Matching m;
            m.edges = chosen;
            Vec2 total(0, 0);
            for (int e : chosen) total += g.edges[e].displacement;
            m.weight = LaurentPolynomial::monomial(total);
            out.push_back(std::move(m));
            return;
        }
        for (int e : by_white[w]) {
            int b = g.edges[e].black;
            if (used[b]) continue;
            used[b] = 1;
            chosen.push_back(e);
            self(self, w + 1);
            chosen.pop_back();
            used[b] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

bool det_matches_matchings(const DualDimer& d) {
    require_valid(d);
    DimerGraph g = build_graph(d);
    if (g.whites.size() != g.blacks.size()) return false;
    LaurentPolynomial det = determinant(kasteleyn_matrix(d, Gauge{}));
    std::map<Vec2, Rat> counts;
    for (const auto& m : enumerate_matchings(d, g)) counts[m.weight.terms().begin()->first] += 1;
    if (counts.size() != det.size()) return false;
    for (const auto& [e, c] : det.terms()) {
        auto it = counts.find(e);
        if (it == counts.end() || it->second != (c < 0 ? Rat(-c) : c)) return false;
    }
    return true;
}

bool novikov_necessary_condition(const DualDimer& d, const NovikovWeights& w) {
    require_valid(d);
    DimerGraph g = build_graph(d);
    for (const auto& [e, v] : w)
        if (v < 0) throw DomainError("Novikov weights must be nonnegative");
    std::optional<Rat> best;
    int ties = 0;
    for (const auto& m : enumerate_matchings(d, g)) {
        Rat total = 0;
        for (int e : m.edges) {
            auto it = w.find(e);
            if (it != w.end()) total += it->second;
        }
        if (!best || total < *best) {
            best = total;
            ties = 1;
        } else if (total == *best) {
            ++ties;
        }
    }
    return ties >= 2;
}

}  // namespace tropdimer
