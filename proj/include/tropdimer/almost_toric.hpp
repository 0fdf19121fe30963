#pragma once

#include "tropdimer/dimer.hpp"
#include "tropdimer/tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropdimer {

struct Node {
    Vec2 position;
    Vec2 eigenray;             // primitive; points from the traded corner into the polygon
    long long multiplicity = 1;
    int corner = -1;           // traded corner of the boundary polygon, or -1
    Rat depth = 0;             // position = corner + depth * eigenray
};

struct Cut {
    int node = -1;
    Vec2 direction;            // from the node towards the corner, i.e. -eigenray
    UnimodularMap transition;  // x -> x + k det(e, x) e
};

struct BaseDiagram {
    std::optional<RatPolygon> boundary;
    std::vector<bool> traded;  // per boundary corner
    std::vector<Node> nodes;
    std::vector<Cut> cuts;

    bool affine_circle() const;  // every corner traded
    int node_at_corner(int corner) const;
};

UnimodularMap cut_monodromy(const Vec2& eigenray, long long multiplicity);

BaseDiagram toric_diagram(const RatPolygon& delzant);
BaseDiagram nodal_trade(const BaseDiagram& diagram, int corner, const Rat& depth = 2);
BaseDiagram trade_all(const RatPolygon& delzant, const Rat& depth = 2);

struct CurveOnBase {
    TropicalCurve curve;
    std::vector<std::pair<int, int>> attachments;  // (edge index, node index)

    int attachment_of(int node) const;  // edge attached to the node, or -1
};

// Balancing where legs on the left of a cut (det(cut, leg) > 0) are carried across it.
bool balanced_on_base(const CurveOnBase& c, const BaseDiagram& d);
bool admissible(const CurveOnBase& c, const BaseDiagram& d);

CurveOnBase build_outer_torus(const BaseDiagram& d, const Rat& r = 1);
// Default t: one more than the deepest node.
CurveOnBase build_inner_torus(const BaseDiagram& d, std::optional<Rat> t = std::nullopt);

// Without a distance the moved vertex is reflected through the node.
enum class ExchangeDirection { Auto, Forward, Inverse };
CurveOnBase nodal_trade_exchange(const CurveOnBase& c, const BaseDiagram& d, int node,
                                 ExchangeDirection dir = ExchangeDirection::Auto,
                                 std::optional<Rat> distance = std::nullopt);
// Exchanges at several nodes at once; every precondition is read off the input curve.
CurveOnBase nodal_trade_exchange(const CurveOnBase& c, const BaseDiagram& d, const std::vector<int>& nodes,
                                 ExchangeDirection dir = ExchangeDirection::Auto,
                                 std::optional<Rat> distance = std::nullopt);

// Order-independent description used to compare curves.
std::vector<std::string> curve_signature(const CurveOnBase& c);
bool same_curve(const CurveOnBase& a, const CurveOnBase& b);

// Local model near one node: node at the origin with eigenray (1,1).
BaseDiagram local_model_diagram();
CurveOnBase local_line_curve();   // bent line crossing the cut at (-1,-1)
CurveOnBase local_pants_curve();  // trivalent vertex at (1,1) with a leaf to the node

struct AnChain {
    BaseDiagram diagram;
    CurveOnBase curve;
};
AnChain an_chain_curve(int n);

struct Slit {
    Vec2 origin;
    Vec2 direction;
    bool closed_at_origin = false;
};

struct Chart {
    RatPolygon region;
    TropicalPolynomial phi;
    std::vector<Slit> slits;
};

struct Overlap {
    int from = -1;
    int to = -1;
    UnimodularMap map;  // coordinates of `from` -> coordinates of `to`
    RatPolygon region;  // in `from` coordinates
};

struct SectionNode {
    Vec2 position;
    Vec2 eigenray;
};

struct ChartedSection {
    std::vector<Chart> charts;
    std::vector<Overlap> overlaps;
    std::vector<SectionNode> nodes;

    ChartedSection transformed(const UnimodularMap& g) const;
};

struct SectionReport {
    bool ok = true;
    std::vector<std::string> problems;
};

SectionReport check_section(const ChartedSection& s);
bool validate_section(const ChartedSection& s);
ChartedSection two_chart_example();
ChartedSection two_chart_nonexample();

struct DelPezzo {
    std::string name;
    RatPolygon polygon;
    std::vector<Vec2> fan;  // inward primitive edge normals
    BaseDiagram traded;
    std::vector<GeodesicLine> seed_lines;
    DualDimer seed;
};

const std::vector<std::string>& del_pezzo_names();
DelPezzo del_pezzo(const std::string& name);
std::vector<DelPezzo> del_pezzo_catalog();
std::vector<H1Class> x3333_classes();

}  // namespace tropdimer
