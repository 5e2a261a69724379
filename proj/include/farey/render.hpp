#pragma once

#include <string>

#include "farey/farey_graph.hpp"

namespace farey::render {

/// Type, label word, one row per triangle, pivots and spine.
std::string ascii(const Ladder& l);

/// The ladder as a horizontal strip: vertices on two rails, one <polygon
/// class="triangle"> per triangle, one <circle class="pivot"> per pivot and
/// the spine as a polyline.
std::string svg(const Ladder& l);

}  // namespace farey::render
