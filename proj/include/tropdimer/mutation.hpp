#pragma once

#include "tropdimer/dimer.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropdimer {

using EdgeWeightAssignment = std::map<int, Rat>;  // graph edge -> weight

// Closed walk in the dimer graph; orientation +1 when the edge is walked black -> white.
struct GraphWalk {
    std::vector<int> edges;
    std::vector<int> orientation;
};

GraphWalk boundary_walk(const DimerFace& f);
Rat cycle_weight(const DimerGraph& g, const GraphWalk& cycle, const EdgeWeightAssignment& w);
EdgeWeightAssignment exact_assignment(const DualDimer& d);

struct MutationResult {
    DualDimer dimer;
    bool immersed = false;
    int face = -1;
    std::vector<int> removed;  // polytope indices of the input that were replaced
    RatPolygon white_hull;
    RatPolygon black_hull;
};

MutationResult mutate_face(const DualDimer& d, int face_index, const EdgeWeightAssignment& w);
MutationResult mutate_face(const DualDimer& d, int face_index);  // constant weights

long long euler_characteristic(const DualDimer& d);

struct DirectionReport {
    std::vector<H1Class> classes;  // one per face, in faces() order
    std::vector<long long> torsion;
};

// Face boundary cycles in H1 of the graph modulo the zigzag cycles, in a basis of its free
// part, padded with zeros when that rank is below 2. Throws when the rank exceeds 2 or the
// dimer is immersed.
DirectionReport mutation_direction_report(const DualDimer& d);
std::vector<H1Class> mutation_directions(const DualDimer& d);

// Per corner of a Delzant polygon with outgoing edge directions u, v: primitive rot90(u + v).
std::vector<H1Class> seed_directions(const RatPolygon& moment_polygon);

std::optional<UnimodularMap> compare_up_to_unimodular(const std::vector<H1Class>& a, const std::vector<H1Class>& b);

// Smith normal form over Z: u * a * v = diag, with u and v unimodular.
struct SmithForm {
    std::vector<std::vector<Int>> u, v, diag;
};
SmithForm smith_normal_form(const std::vector<std::vector<Int>>& a);

}  // namespace tropdimer
