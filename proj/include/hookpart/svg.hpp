// SVG rendering of accumulated zero sets against the reference circle
// |z-1| = 2 with its poles 1 +- 2i.
#pragma once

#include <string>
#include <vector>

#include "hookpart/rootfind.hpp"

namespace hookpart {

/// Fixed 800x800 viewport, no external assets. Roots are dots, the circle
/// is a stroked reference, the poles are annotated markers.
std::string render_roots_svg(const std::vector<ZeroSet>& sets);

} // namespace hookpart
