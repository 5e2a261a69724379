#include "farey/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <absl/container/flat_hash_map.h>
#include <vector>

#include "farey/errors.hpp"

namespace farey::oracle {

namespace {

using Key = std::uint64_t;

constexpr std::int64_t kOffset = std::int64_t{1} << 31;

Key pack(std::int64_t p, std::int64_t q) {
  return (static_cast<Key>(p + kOffset) << 32) | static_cast<Key>(q);
}
std::int64_t key_num(Key k) { return static_cast<std::int64_t>(k >> 32) - kOffset; }
std::int64_t key_den(Key k) { return static_cast<std::int64_t>(k & 0xffffffffu); }

ExtendedRational to_rational(Key k) { return ExtendedRational::reduce(Integer(key_num(k)), Integer(key_den(k))); }

struct Endpoint {
  std::int64_t p;
  std::int64_t q;
};

Endpoint to_endpoint(const ExtendedRational& x, std::int64_t bound) {
  if (!x.num().fits_slong_p() || !x.den().fits_slong_p()) throw OutOfBound(x.str() + " lies outside the oracle bound");
  const Endpoint e{x.num().get_si(), x.den().get_si()};
  if (e.q > bound || e.p > bound || e.p < -bound) {
    throw OutOfBound(x.str() + " lies outside the bound " + std::to_string(bound));
  }
  return e;
}

// One side of a layered bidirectional search.
struct Frontier {
  absl::flat_hash_map<Key, std::uint32_t> depth;
  std::vector<std::vector<Key>> layers;

  explicit Frontier(Key start) {
    depth.emplace(start, 0);
    layers.push_back({start});
  }
  std::uint32_t radius() const { return static_cast<std::uint32_t>(layers.size() - 1); }
  std::int64_t find(Key k) const {
    const auto it = depth.find(k);
    return it == depth.end() ? std::int64_t{-1} : std::int64_t{it->second};
  }
};

// Rough edge count of expanding the outer layer; used to pick the cheaper side.
double expansion_cost(const Frontier& f, std::int64_t bound) {
  double cost = 0;
  for (const Key k : f.layers.back()) {
    const auto height = std::max<std::int64_t>({std::abs(key_num(k)), key_den(k), 1});
    cost += 2.0 * static_cast<double>(bound) / static_cast<double>(height) + 2.0;
  }
  return cost;
}

struct Meeting {
  std::size_t length = 0;
  std::vector<Key> middle;  // vertices at forward depth a and backward depth length - a
};

// Layered bidirectional BFS. Returns nullopt when the two components never meet.
std::optional<Meeting> search(const BoundedSubgraph& g, Frontier& fwd, Frontier& bwd) {
  if (fwd.layers[0][0] == bwd.layers[0][0]) return Meeting{0, {fwd.layers[0][0]}};
  for (;;) {
    const bool grow_fwd = expansion_cost(fwd, g.bound()) <= expansion_cost(bwd, g.bound());
    Frontier& grow = grow_fwd ? fwd : bwd;
    const Frontier& other = grow_fwd ? bwd : fwd;
    if (grow.layers.back().empty()) return std::nullopt;

    const std::uint32_t next_depth = grow.radius() + 1;
    std::vector<Key> next;
    std::vector<Key> touching;
    for (const Key k : grow.layers.back()) {
      g.for_each_neighbour(key_num(k), key_den(k), [&](std::int64_t r, std::int64_t s) {
        const Key n = pack(r, s);
        if (grow.depth.emplace(n, next_depth).second) {
          next.push_back(n);
          if (other.find(n) >= 0) touching.push_back(n);
        }
      });
    }
    grow.layers.push_back(std::move(next));
    if (!touching.empty()) {
      // Every touching vertex sits on the other side's outermost layer.
      return Meeting{static_cast<std::size_t>(fwd.radius() + bwd.radius()), std::move(touching)};
    }
  }
}

// Shortest-path DAG from the frontier's start to the given vertices: for each
// vertex, its neighbours one layer closer to the start.
using Dag = absl::flat_hash_map<Key, std::vector<Key>>;

Dag predecessor_dag(const BoundedSubgraph& g, const Frontier& f, const std::vector<Key>& ends, std::uint32_t depth) {
  Dag dag;
  std::vector<Key> layer = ends;
  for (std::uint32_t d = depth; d > 0; --d) {
    std::vector<Key> below;
    for (const Key v : layer) {
      auto& preds = dag[v];
      g.for_each_neighbour(key_num(v), key_den(v), [&](std::int64_t r, std::int64_t s) {
        const Key u = pack(r, s);
        if (f.find(u) == static_cast<std::int64_t>(d - 1)) preds.push_back(u);
      });
      std::sort(preds.begin(), preds.end());
      below.insert(below.end(), preds.begin(), preds.end());
    }
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    layer = std::move(below);
  }
  return dag;
}

std::uint64_t count_paths(const Dag& dag, Key v, absl::flat_hash_map<Key, std::uint64_t>& memo, std::uint64_t ceiling) {
  const auto it = dag.find(v);
  if (it == dag.end() || it->second.empty()) return 1;  // the start vertex
  if (const auto m = memo.find(v); m != memo.end()) return m->second;
  std::uint64_t total = 0;
  for (const Key u : it->second) total = std::min(ceiling, total + count_paths(dag, u, memo, ceiling));
  memo.emplace(v, total);
  return total;
}

// All paths start -> v, each listed from the start.
void collect_paths(const Dag& dag, Key v, std::vector<Key>& stack, std::vector<std::vector<Key>>& out) {
  stack.push_back(v);
  const auto it = dag.find(v);
  if (it == dag.end() || it->second.empty()) {
    out.emplace_back(stack.rbegin(), stack.rend());
  } else {
    for (const Key u : it->second) collect_paths(dag, u, stack, out);
  }
  stack.pop_back();
}

}  // namespace

BoundedSubgraph::BoundedSubgraph(std::int64_t bound) : bound_(bound) {
  if (bound < 1 || bound >= kOffset / 2) throw OracleBudget("oracle bound " + std::to_string(bound) + " unsupported");
}

bool BoundedSubgraph::contains(std::int64_t p, std::int64_t q) const {
  return q >= 0 && q <= bound_ && p >= -bound_ && p <= bound_ && (q != 0 || p == 1) && std::gcd(p, q) == 1;
}

std::optional<std::size_t> bounded_distance(const ExtendedRational& x, const ExtendedRational& y, std::int64_t bound) {
  const BoundedSubgraph g(bound);
  const Endpoint a = to_endpoint(x, bound);
  const Endpoint b = to_endpoint(y, bound);
  Frontier fwd(pack(a.p, a.q));
  Frontier bwd(pack(b.p, b.q));
  const auto meeting = search(g, fwd, bwd);
  if (!meeting) return std::nullopt;
  return meeting->length;
}

Stabilized stabilize(const ExtendedRational& x, const ExtendedRational& y, const Limits& limits) {
  Integer height = 1;
  for (const auto* v : {&x, &y}) {
    height = std::max<Integer>(height, abs(v->num()));
    height = std::max<Integer>(height, v->den());
  }
  Integer start = 4 * height;
  if (start > limits.max_bound) {
    throw OracleBudget("oracle bound " + to_string(start) + " exceeds " + std::to_string(limits.max_bound));
  }
  std::int64_t bound = start.get_si();
  std::optional<std::size_t> previous = bounded_distance(x, y, bound);
  int unchanged = 0;
  while (unchanged < 2) {
    if (bound > limits.max_bound / 2) {
      throw OracleBudget("distance " + x.str() + " -> " + y.str() + " not stable below bound " +
                         std::to_string(limits.max_bound));
    }
    bound *= 2;
    const auto current = bounded_distance(x, y, bound);
    unchanged = current == previous ? unchanged + 1 : 0;
    previous = current;
  }
  if (!previous) throw OracleBudget(y.str() + " unreachable from " + x.str() + " at bound " + std::to_string(bound));
  return {*previous, bound};
}

std::size_t stabilized_distance(const ExtendedRational& x, const ExtendedRational& y, const Limits& limits) {
  return stabilize(x, y, limits).distance;
}

GeodesicSet bruteforce_geodesics(const ExtendedRational& x, const ExtendedRational& y, std::int64_t bound,
                                 std::size_t max_geodesics) {
  const BoundedSubgraph g(bound);
  const Endpoint a = to_endpoint(x, bound);
  const Endpoint b = to_endpoint(y, bound);
  Frontier fwd(pack(a.p, a.q));
  Frontier bwd(pack(b.p, b.q));
  const auto meeting = search(g, fwd, bwd);
  if (!meeting) throw OracleBudget(y.str() + " unreachable from " + x.str() + " at bound " + std::to_string(bound));

  GeodesicSet set{x, y, meeting->length, {}};
  const Dag to_start = predecessor_dag(g, fwd, meeting->middle, fwd.radius());
  const Dag to_end = predecessor_dag(g, bwd, meeting->middle, bwd.radius());

  const std::uint64_t ceiling = static_cast<std::uint64_t>(max_geodesics) + 1;
  absl::flat_hash_map<Key, std::uint64_t> memo_start, memo_end;
  std::uint64_t total = 0;
  for (const Key m : meeting->middle) {
    const auto left = count_paths(to_start, m, memo_start, ceiling);
    const auto right = count_paths(to_end, m, memo_end, ceiling);
    total = std::min(ceiling, total + std::min(ceiling, left * right));
  }
  if (total > max_geodesics) {
    throw EnumerationOverflow("oracle: more than " + std::to_string(max_geodesics) + " geodesics");
  }

  std::vector<Key> stack;
  for (const Key m : meeting->middle) {
    std::vector<std::vector<Key>> heads, tails;
    collect_paths(to_start, m, stack, heads);
    collect_paths(to_end, m, stack, tails);
    for (const auto& head : heads) {
      for (const auto& tail : tails) {
        Path path;
        for (const Key k : head) path.vertices.push_back(to_rational(k));
        // tail runs end -> m; append it reversed, skipping m.
        for (auto it = tail.rbegin() + 1; it != tail.rend(); ++it) path.vertices.push_back(to_rational(*it));
        set.paths.push_back(std::move(path));
      }
    }
  }
  std::sort(set.paths.begin(), set.paths.end());
  return set;
}

}  // namespace farey::oracle
