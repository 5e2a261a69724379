#include "farey/batch.hpp"

#include <exception>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "farey/farey_graph.hpp"

namespace farey::batch {

namespace {

// Runs body(i) for i in [0, n) across threads. The first exception thrown by
// any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(farey_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Outcome of checking one query; combined into an Agreement afterwards.
struct Check {
  bool distance_ok = true;
  bool geodesics_ok = true;
};

Check check_one(const Query& q, bool geodesics, const Caps& caps, const oracle::Limits& limits) {
  Check c;
  const auto truth = oracle::stabilize(q.x, q.y, limits);
  c.distance_ok = distance(q.x, q.y, caps) == truth.distance;
  if (geodesics) {
    const auto ours = all_geodesics(q.x, q.y, caps);
    const auto theirs = oracle::bruteforce_geodesics(q.x, q.y, truth.bound, limits.max_geodesics);
    c.geodesics_ok = ours.length == theirs.length && ours.paths == theirs.paths;
  }
  return c;
}

Agreement collect(const std::vector<Check>& checks) {
  Agreement a;
  a.checked = checks.size();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i].distance_ok) a.distance_mismatches.push_back(i);
    if (!checks[i].geodesics_ok) a.geodesic_mismatches.push_back(i);
  }
  return a;
}

}  // namespace

std::vector<Query> unit_interval_corpus(long max_den) {
  std::vector<Query> out;
  const auto inf = ExtendedRational::infinity();
  out.push_back({inf, inf});
  for (long q = 1; q <= max_den; ++q) {
    for (long p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.push_back({inf, ExtendedRational::reduce(p, q)});
    }
  }
  return out;
}

std::vector<std::size_t> distances_serial(std::span<const Query> queries, const Caps& caps) {
  std::vector<std::size_t> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(distance(q.x, q.y, caps));
  return out;
}

std::vector<std::size_t> distances_parallel(std::span<const Query> queries, const Caps& caps) {
  std::vector<std::size_t> out(queries.size());
  parallel_for(queries.size(), [&](std::size_t i) { out[i] = distance(queries[i].x, queries[i].y, caps); });
  return out;
}

std::vector<oracle::Stabilized> oracle_serial(std::span<const Query> queries, const oracle::Limits& limits) {
  std::vector<oracle::Stabilized> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(oracle::stabilize(q.x, q.y, limits));
  return out;
}

std::vector<oracle::Stabilized> oracle_parallel(std::span<const Query> queries, const oracle::Limits& limits) {
  std::vector<oracle::Stabilized> out(queries.size());
  parallel_for(queries.size(), [&](std::size_t i) { out[i] = oracle::stabilize(queries[i].x, queries[i].y, limits); });
  return out;
}

Agreement cross_check_serial(std::span<const Query> queries, bool geodesics, const Caps& caps,
                             const oracle::Limits& limits) {
  std::vector<Check> checks;
  checks.reserve(queries.size());
  for (const auto& q : queries) checks.push_back(check_one(q, geodesics, caps, limits));
  return collect(checks);
}

Agreement cross_check_parallel(std::span<const Query> queries, bool geodesics, const Caps& caps,
                               const oracle::Limits& limits) {
  std::vector<Check> checks(queries.size());
  parallel_for(queries.size(), [&](std::size_t i) { checks[i] = check_one(queries[i], geodesics, caps, limits); });
  return collect(checks);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace farey::batch
