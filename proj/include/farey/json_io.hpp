#pragma once

// JSON encoding of command output. Every document is a flat object carrying
// "v": 1. Slopes are "p/q" strings ("1/0" for infinity); integers are JSON
// numbers when they fit in 64 bits and decimal strings otherwise.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "farey/bridge.hpp"
#include "farey/farey_graph.hpp"
#include "farey/rational.hpp"

namespace farey::json_io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json encode(const Integer& n);
Integer decode_integer(const Json& j);

Json encode(const ExtendedRational& x);
ExtendedRational decode_slope(const Json& j);

Json encode(const ContinuedFraction& cf);
ContinuedFraction decode_cf(const Json& j);

Json encode(const Path& path);
Path decode_path(const Json& j);

/// {"v","source","target","distance","unique","count","geodesics"}
Json encode(const GeodesicSet& set);
GeodesicSet decode_geodesics(const Json& j);

/// Plain-data copy of a ladder, with the spine when it is defined.
struct LadderSummary {
  ExtendedRational source;
  ExtendedRational target;
  std::vector<std::size_t> type;
  std::string labels;
  std::vector<std::array<ExtendedRational, 3>> triangles;
  std::vector<ExtendedRational> pivots;
  std::optional<Path> spine;

  static LadderSummary of(const Ladder& l);
  friend bool operator==(const LadderSummary&, const LadderSummary&) = default;
};

Json encode(const LadderSummary& ladder);
LadderSummary decode_ladder(const Json& j);

Json encode(const bridge::SplittingReport& report);
bridge::SplittingReport decode_report(const Json& j);

/// Throws DomainError unless j is an object with "v" == kSchemaVersion.
void check_version(const Json& j);

}  // namespace farey::json_io
