#pragma once

#include "tropdimer/lattice_geom.hpp"
#include "tropdimer/tropical.hpp"

#include <string>
#include <vector>

namespace tropdimer {

struct Polytope {
    Color color;
    RatPolygon polygon;
};

struct DualDimer {
    long long denominator = 1;
    std::vector<Polytope> polytopes;

    std::vector<int> indices_of(Color c) const;
    DualDimer transformed(const UnimodularMap& map) const;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::vector<std::string> offenders;
};

struct ValidationReport {
    std::vector<AxiomCheck> axioms;
    bool self_intersecting = false;
    std::vector<std::string> overlaps;

    bool ok() const;
    const AxiomCheck& axiom(const std::string& name) const;
    std::string str() const;
};

ValidationReport validate(const DualDimer& d);
// Throws DomainError carrying the report text when an axiom fails.
void require_valid(const DualDimer& d);

struct DimerEdge {
    int white = -1;          // index among white polytopes
    int black = -1;          // index among black polytopes
    int white_vertex = -1;   // vertex index in the white polygon
    int black_vertex = -1;
    TorusPoint anchor;
    Vec2 white_lift;         // anchor as a vertex of the stored white polygon
    Vec2 black_lift;
    // black centroid -> anchor -> white centroid, following the stored lifts
    Vec2 displacement;
};

struct DimerGraph {
    std::vector<int> whites;  // polytope index of each white vertex
    std::vector<int> blacks;
    std::vector<DimerEdge> edges;

    int edge_at(int white, int white_vertex) const;
    int edge_at_black(int black, int black_vertex) const;
};

DimerGraph build_graph(const DualDimer& d);
std::string edge_id(const DualDimer& d, const DimerEdge& e);

struct EdgeRef {
    int polytope;  // index into DualDimer::polytopes
    int start;     // polygon edge from vertex start to start + 1 (counterclockwise)
};

struct ZigzagPath {
    std::vector<EdgeRef> edges;
    std::vector<int> graph_edges;     // anchors visited in order
    std::vector<int> orientation;     // +1 when the graph edge is crossed white -> black
    H1Class cls;
};

std::vector<ZigzagPath> zigzag_paths(const DualDimer& d);

struct DimerFace {
    std::vector<int> polytopes;    // alternating, starting with a black polytope
    std::vector<int> graph_edges;  // graph_edges[i] joins polytopes[i] and polytopes[i+1]
    std::vector<int> orientation;  // +1 when graph_edges[i] is walked black -> white
    H1Class cls;
};

std::vector<DimerFace> faces(const DualDimer& d);
std::vector<DimerFace> faces(const DualDimer& d, const DimerGraph& g);
TropicalCurve dimer_to_tropical_fan(const DualDimer& d);

// Closed geodesics on the torus, one per entry: primitive class and offset c, describing
// the points p with <rot90(class)^perp, p> = c mod 1.
struct GeodesicLine {
    H1Class cls;
    Rat offset;
};

// Dimer whose zigzag paths are the given straight lines: regions of the arrangement whose
// boundary follows the line orientations become white (counterclockwise) or black
// (clockwise) polytopes. Throws DomainError for non-generic or inconsistent arrangements.
DualDimer dimer_from_lines(const std::vector<GeodesicLine>& lines);

}  // namespace tropdimer
