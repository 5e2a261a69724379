#pragma once

// 2-bridge links S(q, p), their connected sums, and the distance and
// keenness of their (0,2)- and (0,3)-splittings.
//
// The (0,2)-splitting of S(q, p) glues rational tangles of slopes 1/0 and
// p/q; its distance is the Farey distance between the two slopes. Each side
// has a single essential disk, so the splitting is always keen; it is
// strongly keen exactly when the Farey geodesic is unique.

#include <optional>
#include <string>
#include <vector>

#include "farey/config.hpp"
#include "farey/farey_graph.hpp"
#include "farey/rational.hpp"

namespace farey::bridge {

/// The presentation S(q, p): 0 <= p <= q, gcd(p, q) = 1. S(0, 1) is the
/// 2-component trivial link, q = 1 the trivial knot.
class TwoBridgeLink {
 public:
  /// Throws DomainError unless gcd(p, q) = 1 and either 0 <= p <= q or (q, p) = (0, 1).
  TwoBridgeLink(Integer q, Integer p);

  const Integer& q() const { return q_; }
  const Integer& p() const { return p_; }
  ExtendedRational slope() const { return ExtendedRational::reduce(p_, q_); }

  bool is_two_component_trivial() const { return q_ == 0; }
  bool is_trivial_knot() const { return q_ == 1; }

  std::string str() const;
  friend bool operator==(const TwoBridgeLink&, const TwoBridgeLink&) = default;

 private:
  Integer q_;
  Integer p_;
};

/// 2 when q is even (q = 0 included), otherwise 1.
int components(const TwoBridgeLink& link);

/// One 2-bridge link, or the connected sum of two.
class CompositeLink {
 public:
  explicit CompositeLink(std::vector<TwoBridgeLink> summands);
  const std::vector<TwoBridgeLink>& summands() const { return summands_; }

 private:
  std::vector<TwoBridgeLink> summands_;
};

enum class Splitting { ZeroTwo, ZeroThree };

enum class CaseTag {
  TwoComponentTrivial,  // "0": distance 0
  TrivialKnot,          // "i"
  TwoBridge,            // "ii"
  ConnectedSum,         // "iii"
  OutsideModel,         // "ge2": only a lower bound is known
};

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(std::string_view text);
std::string to_string(Splitting kind);
Splitting splitting_from_string(std::string_view text);

struct Distance {
  std::size_t value = 0;
  bool at_least = false;  // value is a lower bound, not the distance

  friend bool operator==(const Distance&, const Distance&) = default;
};

struct SplittingReport {
  Splitting kind = Splitting::ZeroTwo;
  std::vector<TwoBridgeLink> summands;
  Distance distance;
  bool keen = false;
  bool strongly_keen = false;
  CaseTag tag = CaseTag::TwoBridge;
  std::string basis;
  std::optional<GeodesicSet> geodesics;
};

std::size_t splitting_distance_02(const TwoBridgeLink& link, const Caps& caps = {});
bool is_keen_02(const TwoBridgeLink& link);
bool is_strongly_keen_02(const TwoBridgeLink& link, const Caps& caps = {});

/// Full (0,2) report; geodesics are enumerated only when asked for.
SplittingReport classify_02(const TwoBridgeLink& link, const Caps& caps = {}, bool with_geodesics = false);

/// S(q, p) with p/q = [a1, ..., a_{n-1}], every entry >= 3 (default all 3).
/// Its (0,2)-splitting has distance n and a unique geodesic.
TwoBridgeLink make_strongly_keen_example(std::size_t n, const std::optional<std::vector<Integer>>& entries = {});

/// Distance 0 exactly when a summand is S(0,1); otherwise distance 1 and not keen.
SplittingReport classify_03(const CompositeLink& link);

}  // namespace farey::bridge
