#pragma once

#include <string>

#include "flipbraid/delaunay.hpp"
#include "flipbraid/geometry.hpp"

namespace flipbraid {

struct SvgOptions {
    int width = 640;  // pixels; height follows the aspect ratio
    std::string caption;
};

/// Static SVG drawing: triangles as polygons, points as dots labeled by
/// index. Output depends only on the inputs.
std::string render_svg(const Configuration& config, const Triangulation& triangulation, const SvgOptions& options = {});

}  // namespace flipbraid
