#pragma once

// Brute-force ground truth for Farey distances and geodesics. Works on the
// finite subgraph of all reduced p/q with |p| <= N and 0 <= q <= N, finds
// neighbours by solving p*s - q*r = +-1 directly, and never builds a ladder.

#include <cstdint>
#include <optional>

#include "farey/farey_graph.hpp"
#include "farey/rational.hpp"

namespace farey::oracle {

/// Vertex set {p/q reduced : |p| <= bound, 0 <= q <= bound} with Farey edges.
class BoundedSubgraph {
 public:
  explicit BoundedSubgraph(std::int64_t bound);

  std::int64_t bound() const { return bound_; }
  bool contains(std::int64_t p, std::int64_t q) const;

  /// Calls f(r, s) once for each neighbour r/s inside the bound.
  template <class F>
  void for_each_neighbour(std::int64_t p, std::int64_t q, F&& f) const;

 private:
  std::int64_t bound_;
};

struct Limits {
  std::int64_t max_bound = std::int64_t{1} << 16;
  std::size_t max_geodesics = 100'000;
};

/// Shortest-path length inside BoundedSubgraph(bound); nullopt when y cannot
/// be reached. Throws OutOfBound if an endpoint lies outside the bound.
std::optional<std::size_t> bounded_distance(const ExtendedRational& x, const ExtendedRational& y,
                                            std::int64_t bound);

struct Stabilized {
  std::size_t distance;
  std::int64_t bound;  // the last bound evaluated
};

/// Starts at 4 * max(|p|, q) over both endpoints and doubles the bound until
/// two consecutive doublings leave the distance unchanged. Throws OracleBudget
/// when the bound would pass limits.max_bound.
Stabilized stabilize(const ExtendedRational& x, const ExtendedRational& y, const Limits& limits = {});
std::size_t stabilized_distance(const ExtendedRational& x, const ExtendedRational& y, const Limits& limits = {});

/// All shortest paths inside BoundedSubgraph(bound), sorted. Throws OutOfBound,
/// EnumerationOverflow (more than max_geodesics), or OracleBudget when y is unreachable.
GeodesicSet bruteforce_geodesics(const ExtendedRational& x, const ExtendedRational& y, std::int64_t bound,
                                 std::size_t max_geodesics = 100'000);

// ---------------------------------------------------------------------------

namespace detail {

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// u, v with a*u + b*v = gcd(a, b).
constexpr void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
}

}  // namespace detail

template <class F>
void BoundedSubgraph::for_each_neighbour(std::int64_t p, std::int64_t q, F&& f) const {
  const std::int64_t n = bound_;
  if (q == 0) {
    for (std::int64_t r = -n; r <= n; ++r) f(r, std::int64_t{1});
    return;
  }
  // p*u + q*v = 1; the solutions of p*s - q*r = e are s = e*u + k*q, r = -e*v + k*p.
  std::int64_t u = 0, v = 0;
  detail::ext_gcd(p, q, u, v);
  for (const std::int64_t e : {std::int64_t{1}, std::int64_t{-1}}) {
    const std::int64_t s0 = e * u;
    const std::int64_t r0 = -e * v;
    std::int64_t k_lo = detail::ceil_div(-s0, q);
    std::int64_t k_hi = detail::floor_div(n - s0, q);
    if (p > 0) {
      k_lo = std::max(k_lo, detail::ceil_div(-n - r0, p));
      k_hi = std::min(k_hi, detail::floor_div(n - r0, p));
    } else if (p < 0) {
      k_lo = std::max(k_lo, detail::ceil_div(n - r0, p));
      k_hi = std::min(k_hi, detail::floor_div(-n - r0, p));
    } else if (r0 < -n || r0 > n) {
      continue;
    }
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      const std::int64_t s = s0 + k * q;
      const std::int64_t r = r0 + k * p;
      if (s == 0 && r != 1) continue;  // -1/0 is the same point as 1/0
      f(r, s);
    }
  }
}

}  // namespace farey::oracle
