#pragma once

#include <string>

#include "arcs.hpp"

namespace excseq {

struct RenderOptions {
    int size = 520;       // canvas edge in px
    bool labels = true;   // vertex labels
};

// Deterministic SVG 1.1 drawing: two concentric circles, marked points in
// clockwise numeric order, arcs routed through the cover map so windings
// are visible. Members of crossing or cyclic pairs are drawn in the
// warning color.
std::string render_svg(const ArcDiagram& d, const RenderOptions& opts = {});

}  // namespace excseq
