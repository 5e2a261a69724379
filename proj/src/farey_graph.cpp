#include "farey/farey_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "farey/errors.hpp"

namespace farey {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

void check_ladder_size(const ContinuedFraction& cf, const Caps& caps) {
  // One triangle per unit of the entries; the strip has two more vertices than triangles.
  const Integer vertices = cf.total() + 2;
  if (vertices > caps.ladder_vertices) {
    throw LadderTooLarge("ladder of type " + cf.str() + " has " + to_string(vertices) +
                         " vertices, cap is " + std::to_string(caps.ladder_vertices));
  }
}

// Compressed adjacency of the ladder's vertices and triangle edges.
class LadderGraph {
 public:
  explicit LadderGraph(const Ladder& l) {
    const auto n = l.vertices().size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(6 * l.triangles().size());
    for (const auto& t : l.triangles()) {
      for (int i = 0; i < 3; ++i) {
        const auto u = t.corners[i];
        const auto v = t.corners[(i + 1) % 3];
        edges.emplace_back(u, v);
        edges.emplace_back(v, u);
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    offsets_.assign(n + 1, 0);
    for (const auto& e : edges) ++offsets_[e.first + 1];
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) targets_[i] = edges[i].second;
  }

  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const std::uint32_t> neighbours(std::uint32_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  /// Hop counts from `from`; stops once `stop` is labelled (kUnseen = run to completion).
  std::vector<std::uint32_t> bfs(std::uint32_t from, std::uint32_t stop = kUnseen) const {
    std::vector<std::uint32_t> dist(size(), kUnseen);
    std::vector<std::uint32_t> queue;
    queue.reserve(size());
    dist[from] = 0;
    queue.push_back(from);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      if (v == stop) break;
      for (const auto u : neighbours(v)) {
        if (dist[u] == kUnseen) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    return dist;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

GeodesicSet trivial_set(const ExtendedRational& x, const ExtendedRational& y) {
  GeodesicSet set{x, y, 0, {}};
  if (x == y) {
    set.paths.push_back(Path{{x}});
  } else {
    set.length = 1;
    set.paths.push_back(Path{{x, y}});
  }
  return set;
}

}  // namespace

std::array<ExtendedRational, 3> Ladder::corner_values(std::size_t triangle) const {
  const auto& c = triangles_.at(triangle).corners;
  return {vertices_[c[0]], vertices_[c[1]], vertices_[c[2]]};
}

std::string Ladder::labels() const {
  std::string out;
  out.reserve(triangles_.size());
  for (const auto& t : triangles_) out += t.label == Side::L ? 'L' : 'R';
  return out;
}

std::vector<ExtendedRational> Ladder::pivots() const {
  std::vector<ExtendedRational> out;
  out.reserve(pivot_ids_.size());
  for (const auto id : pivot_ids_) out.push_back(vertices_[id]);
  return out;
}

bool is_adjacent(const ExtendedRational& x, const ExtendedRational& y) {
  const Integer d = det(x, y);
  return d == 1 || d == -1;
}

Ladder ladder(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps) {
  if (x == y) throw EmptyLadder();
  if (is_adjacent(x, y)) throw DegenerateLadder();

  Ladder l;
  l.frame_ = normalize_pair(x, y);
  const ContinuedFraction cf = cf_expand(l.frame_.image);
  check_ladder_size(cf, caps);
  const std::size_t triangle_count = cf.total().get_ui();

  // Strip of L(1/0, p/q): the first triangle is (1/0, 0/1, 1/1); each later
  // triangle is (lo, hi, lo+hi) over the current crossing edge (lo, hi).
  // An L-triangle keeps lo as its pivot, an R-triangle keeps hi.
  std::vector<std::pair<Integer, Integer>> frame_vertices;
  frame_vertices.reserve(triangle_count + 2);
  frame_vertices.emplace_back(1, 0);
  frame_vertices.emplace_back(0, 1);
  frame_vertices.emplace_back(1, 1);
  l.triangles_.reserve(triangle_count);
  l.triangles_.push_back({{0, 1, 2}, Side::L});
  std::uint32_t lo = 1;
  std::uint32_t hi = 2;
  const auto& entries = cf.entries();
  for (std::size_t run = 0; run < entries.size(); ++run) {
    const Side label = run % 2 == 0 ? Side::L : Side::R;
    const std::size_t count = entries[run].get_ui() - (run == 0 ? 1 : 0);
    for (std::size_t k = 0; k < count; ++k) {
      const auto id = static_cast<std::uint32_t>(frame_vertices.size());
      frame_vertices.emplace_back(frame_vertices[lo].first + frame_vertices[hi].first,
                                  frame_vertices[lo].second + frame_vertices[hi].second);
      l.triangles_.push_back({{lo, hi, id}, label});
      (label == Side::L ? hi : lo) = id;
    }
  }
  const auto& last = frame_vertices.back();
  if (last.first != l.frame_.image.num() || last.second != l.frame_.image.den()) {
    throw std::logic_error("ladder strip does not end at " + l.frame_.image.str());
  }

  const MobiusMap back = l.frame_.map.inverse();
  l.vertices_.reserve(frame_vertices.size());
  for (auto& [p, q] : frame_vertices) {
    l.vertices_.push_back(back(ExtendedRational::reduce(std::move(p), std::move(q))));
  }

  for (std::size_t run = 0; run < entries.size(); ++run) l.runs_.push_back(entries[run].get_ui());

  // A vertex is a pivot when it belongs to two triangles at least two apart.
  const auto n = l.vertices_.size();
  std::vector<std::uint32_t> first(n, kUnseen), last_seen(n, 0);
  for (std::uint32_t i = 0; i < l.triangles_.size(); ++i) {
    for (const auto c : l.triangles_[i].corners) {
      first[c] = std::min(first[c], i);
      last_seen[c] = std::max(last_seen[c], i);
    }
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (first[v] != kUnseen && last_seen[v] - first[v] >= 2) l.pivot_ids_.push_back(v);
  }
  std::sort(l.pivot_ids_.begin(), l.pivot_ids_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::pair(first[a], last_seen[a]) < std::pair(first[b], last_seen[b]);
  });
  return l;
}

std::vector<std::size_t> ladder_type(const Ladder& l) {
  std::vector<std::size_t> runs;
  for (std::size_t i = 0; i < l.triangles().size(); ++i) {
    if (i == 0 || l.triangles()[i].label != l.triangles()[i - 1].label) {
      runs.push_back(1);
    } else {
      ++runs.back();
    }
  }
  return runs;
}

Path spine(const Ladder& l) {
  if (l.triangles().size() < 3) throw SpineUndefined(l.triangles().size());
  Path path;
  path.vertices.reserve(l.pivot_ids().size() + 2);
  path.vertices.push_back(l.source());
  for (const auto id : l.pivot_ids()) path.vertices.push_back(l.vertices()[id]);
  path.vertices.push_back(l.target());
  return path;
}

std::size_t distance(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps) {
  if (x == y) return 0;
  if (is_adjacent(x, y)) return 1;
  const Ladder l = ladder(x, y, caps);
  const LadderGraph graph(l);
  const auto target = static_cast<std::uint32_t>(graph.size() - 1);
  return graph.bfs(0, target)[target];
}

GeodesicSet all_geodesics(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps) {
  if (x == y || is_adjacent(x, y)) return trivial_set(x, y);
  const Ladder l = ladder(x, y, caps);
  const LadderGraph graph(l);
  const auto target = static_cast<std::uint32_t>(graph.size() - 1);
  const auto dist = graph.bfs(0);

  // Path counts in BFS order, saturated just above the cap.
  const std::uint64_t ceiling = static_cast<std::uint64_t>(caps.geodesics) + 1;
  std::vector<std::uint32_t> order(graph.size());
  for (std::uint32_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return dist[a] < dist[b]; });
  std::vector<std::uint64_t> count(graph.size(), 0);
  count[0] = 1;
  for (const auto v : order) {
    if (v == 0 || dist[v] == kUnseen) continue;
    std::uint64_t c = 0;
    for (const auto u : graph.neighbours(v)) {
      if (dist[u] + 1 == dist[v]) c = std::min(ceiling, c + count[u]);
    }
    count[v] = c;
  }
  if (count[target] > caps.geodesics) {
    throw EnumerationOverflow("more than " + std::to_string(caps.geodesics) + " geodesics between " + x.str() +
                              " and " + y.str());
  }

  GeodesicSet set{x, y, dist[target], {}};
  set.paths.reserve(count[target]);
  std::vector<std::uint32_t> stack{target};
  std::vector<std::size_t> cursor{0};
  while (!stack.empty()) {
    const auto v = stack.back();
    if (v == 0) {
      Path path;
      path.vertices.reserve(stack.size());
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) path.vertices.push_back(l.vertices()[*it]);
      set.paths.push_back(std::move(path));
      stack.pop_back();
      cursor.pop_back();
      continue;
    }
    const auto nbrs = graph.neighbours(v);
    auto& i = cursor.back();
    while (i < nbrs.size() && dist[nbrs[i]] + 1 != dist[v]) ++i;
    if (i == nbrs.size()) {
      stack.pop_back();
      cursor.pop_back();
    } else {
      stack.push_back(nbrs[i++]);
      cursor.push_back(0);
    }
  }
  std::sort(set.paths.begin(), set.paths.end());
  return set;
}

bool is_unique_geodesic(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps) {
  if (x == y || is_adjacent(x, y)) return true;
  if (cf_expand(normalize_pair(x, y).image).all_at_least(3)) return true;
  return is_unique_geodesic_enumerated(x, y, caps);
}

bool is_unique_geodesic_enumerated(const ExtendedRational& x, const ExtendedRational& y, const Caps& caps) {
  Caps tight = caps;
  tight.geodesics = 1;
  try {
    return all_geodesics(x, y, tight).paths.size() == 1;
  } catch (const EnumerationOverflow&) {
    return false;
  }
}

}  // namespace farey
