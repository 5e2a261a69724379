#include "farey/bridge.hpp"

#include <algorithm>

#include "farey/errors.hpp"

namespace farey::bridge {

TwoBridgeLink::TwoBridgeLink(Integer q, Integer p) : q_(std::move(q)), p_(std::move(p)) {
  // (0,1) is the one presentation with p > q.
  const bool unlink = q_ == 0 && p_ == 1;
  if (q_ < 0 || p_ < 0 || (p_ > q_ && !unlink)) throw DomainError("S(q,p) needs 0 <= p <= q, got " + str());
  Integer g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  if (g != 1) throw DomainError("S(q,p) needs gcd(p,q) = 1, got " + str());
}

std::string TwoBridgeLink::str() const { return "S(" + q_.get_str(10) + "," + p_.get_str(10) + ")"; }

int components(const TwoBridgeLink& link) { return mpz_even_p(link.q().get_mpz_t()) ? 2 : 1; }

CompositeLink::CompositeLink(std::vector<TwoBridgeLink> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw DomainError("a composite link needs at least one summand");
  if (summands_.size() > 2) {
    throw DomainError("(0,3)-splittings cover at most two 2-bridge summands, got " +
                      std::to_string(summands_.size()));
  }
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::TwoComponentTrivial: return "0";
    case CaseTag::TrivialKnot: return "i";
    case CaseTag::TwoBridge: return "ii";
    case CaseTag::ConnectedSum: return "iii";
    case CaseTag::OutsideModel: return "ge2";
  }
  return "?";
}

CaseTag case_tag_from_string(std::string_view text) {
  for (const auto tag : {CaseTag::TwoComponentTrivial, CaseTag::TrivialKnot, CaseTag::TwoBridge,
                         CaseTag::ConnectedSum, CaseTag::OutsideModel}) {
    if (to_string(tag) == text) return tag;
  }
  throw DomainError("unknown case tag '" + std::string(text) + "'");
}

std::string to_string(Splitting kind) { return kind == Splitting::ZeroTwo ? "0,2" : "0,3"; }

Splitting splitting_from_string(std::string_view text) {
  if (text == "0,2") return Splitting::ZeroTwo;
  if (text == "0,3") return Splitting::ZeroThree;
  throw DomainError("unknown splitting kind '" + std::string(text) + "'");
}

std::size_t splitting_distance_02(const TwoBridgeLink& link, const Caps& caps) {
  return distance(ExtendedRational::infinity(), link.slope(), caps);
}

bool is_keen_02(const TwoBridgeLink&) { return true; }

bool is_strongly_keen_02(const TwoBridgeLink& link, const Caps& caps) {
  return is_unique_geodesic(ExtendedRational::infinity(), link.slope(), caps);
}

SplittingReport classify_02(const TwoBridgeLink& link, const Caps& caps, bool with_geodesics) {
  SplittingReport report;
  report.kind = Splitting::ZeroTwo;
  report.summands = {link};
  report.distance = {splitting_distance_02(link, caps), false};
  report.keen = is_keen_02(link);
  report.strongly_keen = is_strongly_keen_02(link, caps);
  report.tag = link.is_two_component_trivial() ? CaseTag::TwoComponentTrivial
               : link.is_trivial_knot()        ? CaseTag::TrivialKnot
                                               : CaseTag::TwoBridge;
  report.basis = "keen: a 2-string trivial tangle has one essential disk; strongly keen iff the Farey geodesic "
                 "from 1/0 to the slope is unique";
  if (with_geodesics) report.geodesics = all_geodesics(ExtendedRational::infinity(), link.slope(), caps);
  return report;
}

TwoBridgeLink make_strongly_keen_example(std::size_t n, const std::optional<std::vector<Integer>>& entries) {
  if (n < 2) throw DomainError("strongly keen examples are built for distance n >= 2, got " + std::to_string(n));
  std::vector<Integer> chosen = entries.value_or(std::vector<Integer>(n - 1, Integer(3)));
  if (chosen.size() != n - 1) {
    throw DomainError("distance " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                      " continued fraction entries, got " + std::to_string(chosen.size()));
  }
  if (!std::all_of(chosen.begin(), chosen.end(), [](const Integer& a) { return a >= 3; })) {
    throw DomainError("every continued fraction entry must be at least 3");
  }
  const ExtendedRational slope = cf_eval(ContinuedFraction(std::move(chosen)));
  return TwoBridgeLink(slope.den(), slope.num());
}

SplittingReport classify_03(const CompositeLink& link) {
  SplittingReport report;
  report.kind = Splitting::ZeroThree;
  report.summands = link.summands();
  const auto& parts = link.summands();

  if (std::any_of(parts.begin(), parts.end(), [](const auto& s) { return s.is_two_component_trivial(); })) {
    report.distance = {0, false};
    report.tag = CaseTag::TwoComponentTrivial;
    report.basis = "a summand is the 2-component trivial link, so the exterior is reducible; keenness at "
                   "distance 0 is not decided and is reported false";
    return report;
  }

  const auto trivial = std::count_if(parts.begin(), parts.end(), [](const auto& s) { return s.is_trivial_knot(); });
  const auto nontrivial = static_cast<std::ptrdiff_t>(parts.size()) - trivial;
  report.distance = {1, false};
  report.tag = nontrivial == 0 ? CaseTag::TrivialKnot : nontrivial == 1 ? CaseTag::TwoBridge : CaseTag::ConnectedSum;
  report.keen = false;
  report.strongly_keen = false;
  report.basis = "distance 1: the separating sphere gives two distinct pairs of essential disks at distance 1";
  return report;
}

}  // namespace farey::bridge
