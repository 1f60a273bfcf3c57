#pragma once

#include <string>
#include <vector>

#include "acute/tiling.hpp"

namespace acute {

// Standalone SVG 1.1 document. Output depends only on the arguments: fixed
// coordinate precision, input tile order, no timestamps. Throws EmptyTileList.
std::string render_svg(const std::vector<Tile>& tiles, const Viewport& vp, bool overlay_T);

} // namespace acute
