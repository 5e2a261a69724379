#pragma once

// Ladders and simplicial geodesics in the Farey graph.
//
// A ladder L(x, y) is the strip of Farey triangles crossed by the hyperbolic
// geodesic from x to y. It is built combinatorially: the pair is moved to
// (1/0, p/q) with 0 < p/q < 1 by an orientation-preserving map, the triangle
// strip of (1/0, p/q) is generated run by run from the continued fraction of
// p/q, and every vertex is mapped back. Simplicial geodesics between x and y
// all lie inside the ladder, so distances and geodesic sets come from a
// breadth-first search on the ladder's vertices and edges.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "farey/config.hpp"
#include "farey/rational.hpp"

namespace farey {

/// Side of the oriented geodesic on which a triangle's pivot lies. The first
/// run of every ladder is labelled L; only the alternation is intrinsic.
enum class Side : std::uint8_t { L, R };

struct FareyTriangle {
  std::array<std::uint32_t, 3> corners;  // indices into Ladder::vertices()
  Side label;
};

/// A simplicial path; consecutive vertices are Farey neighbours.
struct Path {
  std::vector<ExtendedRational> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.vertices <=> b.vertices; }
};

struct GeodesicSet {
  ExtendedRational source;
  ExtendedRational target;
  std::size_t length = 0;
  std::vector<Path> paths;  // sorted lexicographically
};

class Ladder {
 public:
  const ExtendedRational& source() const { return vertices_.front(); }
  const ExtendedRational& target() const { return vertices_.back(); }

  /// Vertex 0 is the source, the last vertex is the target; every other
  /// vertex appears in the order the strip first reaches it.
  const std::vector<ExtendedRational>& vertices() const { return vertices_; }
  const std::vector<FareyTriangle>& triangles() const { return triangles_; }
  std::array<ExtendedRational, 3> corner_values(std::size_t triangle) const;

  /// Run lengths of equal labels, in geodesic order.
  const std::vector<std::size_t>& runs() const { return runs_; }
  std::string labels() const;

  /// Vertices shared by two non-consecutive triangles, ordered along the ladder.
  const std::vector<std::uint32_t>& pivot_ids() const { return pivot_ids_; }
  std::vector<ExtendedRational> pivots() const;

  /// The orientation-preserving map taking (source, target) to (1/0, p/q).
  const NormalizedPair& frame() const { return frame_; }

 private:
  friend Ladder ladder(const ExtendedRational&, const ExtendedRational&, const Caps&);

  NormalizedPair frame_;
  std::vector<ExtendedRational> vertices_;
  std::vector<FareyTriangle> triangles_;
  std::vector<std::size_t> runs_;
  std::vector<std::uint32_t> pivot_ids_;
};

bool is_adjacent(const ExtendedRational& x, const ExtendedRational& y);

/// Throws EmptyLadder for x == y, DegenerateLadder for adjacent endpoints and
/// LadderTooLarge when the ladder would exceed caps.ladder_vertices.
Ladder ladder(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps = {});

std::vector<std::size_t> ladder_type(const Ladder& l);

/// Path from source to target whose interior vertices are the pivots.
/// Throws SpineUndefined for ladders with fewer than three triangles.
Path spine(const Ladder& l);

std::size_t distance(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps = {});

/// Every shortest path from x to y. Throws EnumerationOverflow when there are
/// more than caps.geodesics of them.
GeodesicSet all_geodesics(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps = {});

/// True iff exactly one geodesic joins x and y. Ladders whose continued
/// fraction has every entry >= 3 are answered without enumeration.
bool is_unique_geodesic(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps = {});

/// Same answer, always by enumeration. Kept to check the shortcut above.
bool is_unique_geodesic_enumerated(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps = {});

}  // namespace farey
