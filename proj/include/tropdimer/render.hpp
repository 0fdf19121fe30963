#pragma once

#include "tropdimer/io.hpp"

#include <set>
#include <string>

namespace tropdimer {

struct RenderOptions {
    std::set<std::string> layers = {"polytopes", "edges"};  // plus "zigzags", "fan"
    int scale = 400;
};

std::string render_dimer_svg(const DualDimer& d, const RenderOptions& opt = {});
std::string render_diagram_svg(const DiagramDocument& doc, const RenderOptions& opt = {});

}  // namespace tropdimer
