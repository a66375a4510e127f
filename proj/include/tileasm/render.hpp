#pragma once

#include <set>
#include <string>
#include <vector>

#include "tileasm/tas.hpp"

namespace tileasm {

// One character per site, top row first: the tile name's initial, '.' when
// empty.
std::string render_ascii(const Assembly& a);

struct SvgOverlay {
    std::set<Point> shaded;          // drawn as translucent cells
    std::vector<Point> marks;        // drawn as dots
    std::vector<Point> polyline;     // drawn as a path through cell centres
};

std::string render_svg(const Assembly& a, const SvgOverlay& overlay = {});

}  // namespace tileasm
