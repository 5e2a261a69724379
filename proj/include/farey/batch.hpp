#pragma once

// Data-parallel sweeps over many slope pairs. Each query is independent, so
// the parallel kernels split the batch across OpenMP threads; the *_serial
// versions are the reference they are tested against.

#include <cstddef>
#include <span>
#include <vector>

#include "farey/config.hpp"
#include "farey/oracle.hpp"
#include "farey/rational.hpp"

namespace farey::batch {

struct Query {
  ExtendedRational x;
  ExtendedRational y;
};

/// (1/0, p/q) for every reduced p/q with 1 <= q <= max_den and 0 <= p <= q,
/// preceded by (1/0, 1/0).
std::vector<Query> unit_interval_corpus(long max_den);

std::vector<std::size_t> distances_serial(std::span<const Query> queries, const Caps& caps = {});
std::vector<std::size_t> distances_parallel(std::span<const Query> queries, const Caps& caps = {});

std::vector<oracle::Stabilized> oracle_serial(std::span<const Query> queries, const oracle::Limits& limits = {});
std::vector<oracle::Stabilized> oracle_parallel(std::span<const Query> queries, const oracle::Limits& limits = {});

struct Agreement {
  std::size_t checked = 0;
  std::vector<std::size_t> distance_mismatches;  // query indices
  std::vector<std::size_t> geodesic_mismatches;

  bool ok() const { return distance_mismatches.empty() && geodesic_mismatches.empty(); }
};

/// Compares ladder distances (and, if asked, full geodesic sets) with the
/// oracle at its stabilized bound.
Agreement cross_check_serial(std::span<const Query> queries, bool geodesics, const Caps& caps = {},
                             const oracle::Limits& limits = {});
Agreement cross_check_parallel(std::span<const Query> queries, bool geodesics, const Caps& caps = {},
                               const oracle::Limits& limits = {});

int max_threads();

}  // namespace farey::batch
