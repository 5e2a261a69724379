#pragma once

#include <cstddef>

namespace farey {

/// Enumeration caps. A query that would exceed one throws a ResourceError
/// instead of running unbounded.
struct Caps {
  std::size_t ladder_vertices = 1'000'000;
  std::size_t geodesics = 100'000;

  /// Defaults overridden by FAREY_LADDER_CAP / FAREY_GEO_CAP when set.
  static Caps from_env();
};

}  // namespace farey
