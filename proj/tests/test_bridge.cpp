#include <doctest.h>

#include <numeric>

#include "farey/bridge.hpp"
#include "farey/errors.hpp"
#include "farey/oracle.hpp"

using namespace farey;
using namespace farey::bridge;

namespace {

TwoBridgeLink S(long q, long p) { return TwoBridgeLink(q, p); }

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("2-bridge presentations") {
  CHECK(S(0, 1).slope().is_infinity());
  CHECK(S(10, 3).slope() == ExtendedRational::parse("3/10"));
  CHECK(S(1, 0).is_trivial_knot());
  CHECK(S(1, 1).is_trivial_knot());
  CHECK(S(0, 1).is_two_component_trivial());
  CHECK(S(10, 3).str() == "S(10,3)");
  CHECK_THROWS_AS(S(4, 2), DomainError);
  CHECK_THROWS_AS(S(3, 4), DomainError);
  CHECK_THROWS_AS(S(3, -1), DomainError);
  CHECK_THROWS_AS(S(-3, 1), DomainError);
  CHECK_THROWS_AS(S(0, 0), DomainError);
  CHECK_THROWS_AS(CompositeLink({}), DomainError);
  CHECK_THROWS_AS(CompositeLink({S(3, 1), S(3, 1), S(3, 1)}), DomainError);
}

TEST_CASE("components") {
  CHECK(components(S(0, 1)) == 2);
  CHECK(components(S(3, 1)) == 1);
  CHECK(components(S(4, 1)) == 2);
  CHECK(components(S(1, 0)) == 1);
}

TEST_CASE("(0,2)-splittings") {
  CHECK(splitting_distance_02(S(0, 1)) == 0);
  CHECK(splitting_distance_02(S(1, 0)) == 1);
  CHECK(splitting_distance_02(S(10, 3)) == 3);
  CHECK(splitting_distance_02(S(182, 79)) == 6);

  for (const auto& l : {S(10, 3), S(0, 1), S(182, 79), S(2, 1)}) CHECK(is_keen_02(l));

  CHECK(is_strongly_keen_02(S(10, 3)));
  CHECK_FALSE(is_strongly_keen_02(S(2, 1)));
  CHECK(is_strongly_keen_02(S(1, 0)));
  CHECK(is_strongly_keen_02(S(0, 1)));
  CHECK_FALSE(is_strongly_keen_02(S(182, 79)));

  const auto report = classify_02(S(2, 1), {}, true);
  CHECK(report.kind == Splitting::ZeroTwo);
  CHECK(report.distance == Distance{2, false});
  CHECK(report.keen);
  CHECK_FALSE(report.strongly_keen);
  REQUIRE(report.geodesics.has_value());
  CHECK(report.geodesics->paths.size() == 2);
  CHECK_FALSE(classify_02(S(2, 1)).geodesics.has_value());
}

TEST_CASE("strongly keen examples") {
  CHECK(make_strongly_keen_example(2) == S(3, 1));
  CHECK(make_strongly_keen_example(3) == S(10, 3));
  CHECK(make_strongly_keen_example(3, ints({4, 5})).slope() == cf_eval(ContinuedFraction(ints({4, 5}))));
  CHECK_THROWS_AS(make_strongly_keen_example(6, ints({3, 3, 3, 2, 3})), DomainError);
  CHECK_THROWS_AS(make_strongly_keen_example(3, ints({3, 3, 3})), DomainError);
  CHECK_THROWS_AS(make_strongly_keen_example(1), DomainError);
  CHECK_THROWS_AS(make_strongly_keen_example(3, ints({3, 1})), DomainError);
}

TEST_CASE("entries >= 3 give distance n and a unique geodesic, length <= 6") {
  // Entries from {3, 4, 5}; the full grid up to length 6 has 1092 cases.
  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<long> digits(len, 3);
    for (;;) {
      const auto link = make_strongly_keen_example(len + 1, std::vector<Integer>(digits.begin(), digits.end()));
      REQUIRE(splitting_distance_02(link) == len + 1);
      REQUIRE(is_strongly_keen_02(link));
      REQUIRE(is_unique_geodesic_enumerated(ExtendedRational::infinity(), link.slope()));
      ++checked;
      std::size_t i = 0;
      while (i < len && digits[i] == 5) digits[i++] = 3;
      if (i == len) break;
      ++digits[i];
    }
  }
  CHECK(checked == 3 + 9 + 27 + 81 + 243 + 729);
}

TEST_CASE("splitting distance equals the oracle for q <= 80") {
  std::vector<TwoBridgeLink> links{S(0, 1)};
  for (long q = 1; q <= 80; ++q)
    for (long p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) links.push_back(S(q, p));
  for (const auto& link : links) {
    const auto report = classify_02(link);
    REQUIRE(report.distance.value == oracle::stabilized_distance(ExtendedRational::infinity(), link.slope()));
    REQUIRE(report.keen);
    if (report.distance.value == 1) REQUIRE(report.strongly_keen);
  }
}

TEST_CASE("(0,3)-splittings") {
  const auto zero = classify_03(CompositeLink({S(0, 1)}));
  CHECK(zero.distance == Distance{0, false});
  CHECK(zero.tag == CaseTag::TwoComponentTrivial);
  CHECK(classify_03(CompositeLink({S(3, 1), S(0, 1)})).distance.value == 0);

  const auto unknot = classify_03(CompositeLink({S(1, 0)}));
  CHECK(unknot.distance == Distance{1, false});
  CHECK(unknot.tag == CaseTag::TrivialKnot);
  CHECK_FALSE(unknot.keen);

  const auto trefoil = classify_03(CompositeLink({S(3, 1)}));
  CHECK(trefoil.distance == Distance{1, false});
  CHECK(trefoil.tag == CaseTag::TwoBridge);
  CHECK_FALSE(trefoil.keen);
  CHECK_FALSE(trefoil.strongly_keen);

  const auto sum = classify_03(CompositeLink({S(3, 1), S(5, 2)}));
  CHECK(sum.kind == Splitting::ZeroThree);
  CHECK(sum.distance == Distance{1, false});
  CHECK(sum.tag == CaseTag::ConnectedSum);
  CHECK_FALSE(sum.keen);

  CHECK(classify_03(CompositeLink({S(1, 0), S(5, 2)})).tag == CaseTag::TwoBridge);
  CHECK(classify_03(CompositeLink({S(1, 0), S(1, 1)})).tag == CaseTag::TrivialKnot);
}

TEST_CASE("(0,3) distance is 0 exactly when a summand is S(0,1)") {
  std::vector<TwoBridgeLink> links{S(0, 1), S(1, 0), S(1, 1)};
  for (long q = 2; q <= 12; ++q)
    for (long p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) links.push_back(S(q, p));
  for (const auto& a : links) {
    CHECK((classify_03(CompositeLink({a})).distance.value == 0) == a.is_two_component_trivial());
    for (const auto& b : links) {
      const auto report = classify_03(CompositeLink({a, b}));
      const bool trivial = a.is_two_component_trivial() || b.is_two_component_trivial();
      REQUIRE((report.distance.value == 0) == trivial);
      REQUIRE_FALSE(report.distance.at_least);
      if (report.strongly_keen) REQUIRE(report.keen);
    }
  }
}

TEST_CASE("case tags round-trip through strings") {
  for (const auto t : {CaseTag::TwoComponentTrivial, CaseTag::TrivialKnot, CaseTag::TwoBridge, CaseTag::ConnectedSum,
                       CaseTag::OutsideModel}) {
    CHECK(case_tag_from_string(to_string(t)) == t);
  }
  CHECK(to_string(CaseTag::ConnectedSum) == "iii");
  CHECK(splitting_from_string(to_string(Splitting::ZeroThree)) == Splitting::ZeroThree);
  CHECK_THROWS_AS(case_tag_from_string("iv"), DomainError);
}
