#pragma once

#include "tropdimer/dimer.hpp"
#include "tropdimer/laurent.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tropdimer {

struct Gauge {
    enum class Kind { Paper, Trivial, Random } kind = Kind::Paper;
    std::uint64_t seed = 0;

    static Gauge parse(const std::string& text);
    std::string str() const;
};

struct KasteleynMatrix {
    std::vector<int> rows;  // white polytope indices
    std::vector<int> cols;  // black polytope indices
    std::vector<std::vector<LaurentPolynomial>> entries;

    bool square() const { return rows.size() == cols.size(); }
};

struct Matching {
    std::vector<int> edges;  // graph edge per white vertex, in white order
    LaurentPolynomial weight;
};

using NovikovWeights = std::map<int, Rat>;  // graph edge -> weight

// +1/-1 per graph edge so that every face with 2k edges has sign product (-1)^(k+1).
// Immersed dimers and unsolvable systems get all +1.
std::vector<int> kasteleyn_signs(const DualDimer& d, const DimerGraph& g);

LaurentPolynomial edge_monomial(const DualDimer& d, const DimerGraph& g, int edge, const Gauge& gauge);
KasteleynMatrix kasteleyn_matrix(const DualDimer& d, const Gauge& gauge);
LaurentPolynomial determinant(const KasteleynMatrix& m);
LaurentPolynomial determinant(const std::vector<std::vector<LaurentPolynomial>>& m);
// Translate so the vertex centroid of the Newton polygon sits at the origin, then make the
// coefficient at the origin (or, if absent, at the smallest exponent) positive.
LaurentPolynomial normalize_determinant(const LaurentPolynomial& p);
std::vector<Matching> enumerate_matchings(const DualDimer& d, const DimerGraph& g);
bool det_matches_matchings(const DualDimer& d);
bool novikov_necessary_condition(const DualDimer& d, const NovikovWeights& w);

}  // namespace tropdimer
