#pragma once

#include "tropdimer/almost_toric.hpp"
#include "tropdimer/dimer.hpp"
#include "tropdimer/laurent.hpp"

#include <map>
#include <optional>
#include <string>

namespace tropdimer {

struct DimerDocument {
    DualDimer dimer;
    std::map<std::string, Rat> weights;  // edge id -> weight
};

// Schema and syntax problems raise ParseError; axioms are not checked here.
DimerDocument parse_dimer(const std::string& text);
std::string serialize_dimer(const DimerDocument& doc);
std::string serialize_dimer(const DualDimer& d);
// Polytopes sorted (white first, then by vertex list); weight ids follow the new order.
DimerDocument canonicalize(const DimerDocument& doc);
DualDimer canonicalize(const DualDimer& d);

struct DiagramDocument {
    BaseDiagram diagram;
    std::optional<CurveOnBase> curve;
};

DiagramDocument parse_diagram(const std::string& text);
std::string serialize_diagram(const DiagramDocument& doc);

std::string laurent_json(const LaurentPolynomial& p);

// "dimer" or "diagram" from the schema field, or ParseError.
std::string document_kind(const std::string& text);

}  // namespace tropdimer
