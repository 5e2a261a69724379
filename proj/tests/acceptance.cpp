// Acceptance run: one PASS/FAIL line per criterion, with the time limit each
// one is held to. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "farey/batch.hpp"
#include "farey/bridge.hpp"
#include "farey/cli.hpp"
#include "farey/farey_graph.hpp"

using namespace farey;
using Clock = std::chrono::steady_clock;

namespace {

const ExtendedRational kInf = ExtendedRational::infinity();
ExtendedRational r(const char* s) { return ExtendedRational::parse(s); }

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Median wall time of `reps` calls, after one warm-up call.
double median_ms(const std::function<void()>& f, int reps = 101) {
  f();
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    f();
    t.push_back(ms_since(start));
  }
  std::nth_element(t.begin(), t.begin() + reps / 2, t.end());
  return t[reps / 2];
}

struct Outcome {
  bool ok = true;
  std::string detail;
  double ms = 0;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void report(int id, const char* name, Outcome o, double limit_ms) {
  const bool in_time = o.ms <= limit_ms;
  if (!in_time) o.expect(false, "over time limit");
  std::printf("[%s] %d %-52s %10.3f ms (limit %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, o.ms, limit_ms,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string cli_out(std::vector<std::string> args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

Outcome criterion_cf() {
  Outcome o;
  const auto expansion = cf_expand(r("79/182"));
  std::vector<Integer> expected{2, 3, 3, 2, 3};
  o.expect(expansion.entries() == expected, "cf 79/182 = " + expansion.str());
  o.expect(cf_eval(ContinuedFraction(expected)) == r("79/182"), "eval");
  o.expect(cli_out({"cf", "79/182"}) == "[2,3,3,2,3]\n", "cli cf");
  o.expect(cli_out({"eval", "2,3,3,2,3"}) == "79/182\n", "cli eval");
  const double a = median_ms([] { (void)cf_expand(r("79/182")); });
  const double b = median_ms([] { (void)cf_eval(ContinuedFraction::parse("2,3,3,2,3")); });
  o.ms = std::max(a, b);
  return o;
}

Outcome criterion_ladder() {
  Outcome o;
  const auto l = ladder(kInf, r("19/42"));
  o.expect(ladder_type(l) == std::vector<std::size_t>{2, 4, 1, 3}, "type");
  o.expect(l.pivots().size() == 4, "pivot count " + std::to_string(l.pivots().size()));
  const auto k = spine(l);
  std::vector<ExtendedRational> interior(k.vertices.begin() + 1, k.vertices.end() - 1);
  o.expect(interior == l.pivots(), "spine interior != pivots");
  o.expect(k.vertices.front() == kInf && k.vertices.back() == r("19/42"), "spine endpoints");
  for (std::size_t i = 0; i + 1 < k.vertices.size(); ++i)
    o.expect(is_adjacent(k.vertices[i], k.vertices[i + 1]), "spine edge");
  o.ms = median_ms([] {
    const auto m = ladder(kInf, r("19/42"));
    (void)spine(m);
  });
  return o;
}

Outcome criterion_keen_family() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> pick(3, 5);
  std::size_t cases = 0;
  const auto start = Clock::now();
  for (std::size_t n = 2; n <= 8; ++n) {
    const std::size_t len = n - 1;
    std::vector<std::vector<Integer>> grid;
    std::size_t full = 1;
    for (std::size_t i = 0; i < len; ++i) full *= 3;
    if (full <= 200) {
      std::vector<long> d(len, 3);
      for (;;) {
        grid.emplace_back(d.begin(), d.end());
        std::size_t i = 0;
        while (i < len && d[i] == 5) d[i++] = 3;
        if (i == len) break;
        ++d[i];
      }
    } else {
      while (grid.size() < 200) {
        std::vector<Integer> e;
        for (std::size_t i = 0; i < len; ++i) e.emplace_back(pick(rng));
        grid.push_back(std::move(e));
      }
    }
    for (auto& entries : grid) {
      const auto link = bridge::make_strongly_keen_example(n, entries);
      const auto d = bridge::splitting_distance_02(link);
      const auto set = all_geodesics(kInf, link.slope());
      const auto k = spine(ladder(kInf, link.slope()));
      if (d != n || set.paths.size() != 1 || set.paths[0] != k) {
        o.expect(false, link.str());
      }
      ++cases;
    }
  }
  o.ms = ms_since(start);
  o.detail = o.ok ? std::to_string(cases) + " cases" : o.detail;
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  const auto start = Clock::now();
  const auto corpus = batch::unit_interval_corpus(200);
  const auto agreement = batch::cross_check_parallel(corpus, true);
  o.ms = ms_since(start);
  o.expect(agreement.checked == corpus.size(), "not every query checked");
  o.expect(agreement.distance_mismatches.empty(),
           std::to_string(agreement.distance_mismatches.size()) + " distance mismatches");
  o.expect(agreement.geodesic_mismatches.empty(),
           std::to_string(agreement.geodesic_mismatches.size()) + " geodesic-set mismatches");
  if (o.ok) o.detail = std::to_string(corpus.size()) + " slopes";
  return o;
}

Outcome criterion_half() {
  Outcome o;
  const auto start = Clock::now();
  const auto set = all_geodesics(kInf, r("1/2"));
  const std::vector<Path> expected{Path{{kInf, r("0/1"), r("1/2")}}, Path{{kInf, r("1/1"), r("1/2")}}};
  o.expect(set.paths == expected, "geodesic set");
  o.expect(!bridge::is_strongly_keen_02(bridge::TwoBridgeLink(2, 1)), "S(2,1) reported strongly keen");
  o.ms = ms_since(start);
  return o;
}

Outcome criterion_classify_03() {
  using namespace bridge;
  Outcome o;
  const auto start = Clock::now();
  std::vector<TwoBridgeLink> links{TwoBridgeLink(0, 1), TwoBridgeLink(1, 0), TwoBridgeLink(1, 1)};
  for (long q = 2; q <= 15; ++q)
    for (long p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) links.emplace_back(q, p);
  for (const auto& a : links) {
    const bool zero = classify_03(CompositeLink({a})).distance.value == 0;
    o.expect(zero == a.is_two_component_trivial(), "distance-0 predicate for " + a.str());
    for (const auto& b : links) {
      const bool z2 = classify_03(CompositeLink({a, b})).distance.value == 0;
      if (z2 != (a.is_two_component_trivial() || b.is_two_component_trivial())) {
        o.expect(false, "distance-0 predicate for " + a.str() + "#" + b.str());
      }
    }
  }
  auto check = [&](const SplittingReport& rep, CaseTag tag, const char* name) {
    o.expect(rep.distance == Distance{1, false} && !rep.keen && rep.tag == tag, name);
  };
  check(classify_03(CompositeLink({TwoBridgeLink(1, 0)})), CaseTag::TrivialKnot, "[S(1,0)]");
  check(classify_03(CompositeLink({TwoBridgeLink(3, 1)})), CaseTag::TwoBridge, "[S(3,1)]");
  check(classify_03(CompositeLink({TwoBridgeLink(3, 1), TwoBridgeLink(5, 2)})), CaseTag::ConnectedSum,
        "[S(3,1),S(5,2)]");
  o.ms = ms_since(start);
  return o;
}

Outcome criterion_unknot() {
  Outcome o;
  const auto start = Clock::now();
  o.expect(bridge::splitting_distance_02(bridge::TwoBridgeLink(1, 0)) == 1, "distance");
  o.ms = ms_since(start);
  return o;
}

MobiusMap random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-30, 30), shift(-5, 5), sign(0, 1);
  for (;;) {
    const long a = entry(rng), c = entry(rng);
    if (std::gcd(a, c) != 1) continue;
    // a*d - b*c = 1 from the extended gcd, then shift by a multiple of (a, c).
    long old_r = a, rr = c, old_s = 1, s = 0, old_t = 0, t = 1;
    while (rr != 0) {
      const long quot = old_r / rr;
      std::tie(old_r, rr) = std::make_pair(rr, old_r - quot * rr);
      std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - quot * t);
    }
    if (old_r < 0) old_s = -old_s, old_t = -old_t;
    // a*old_s + c*old_t = 1, so d = old_s, b = -old_t.
    const long k = shift(rng);
    long b = -old_t + k * a, d = old_s + k * c;
    if (sign(rng)) b = -b, d = -d;  // determinant -1
    return MobiusMap(a, b, c, d);
  }
}

Outcome criterion_metric() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-100, 100), den(0, 100);
  std::vector<std::pair<ExtendedRational, ExtendedRational>> pairs;
  while (pairs.size() < 1000) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
    pairs.emplace_back(ExtendedRational::reduce(a, b), ExtendedRational::reduce(c, d));
  }
  std::vector<MobiusMap> maps;
  for (int i = 0; i < 100; ++i) maps.push_back(random_unimodular(rng));

  std::size_t bad_sym = 0, bad_tri = 0, bad_mod = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const auto& z = pairs[(i + 1) % pairs.size()].first;
    const auto d = distance(x, y);
    bad_sym += d != distance(y, x);
    bad_tri += d > distance(x, z) + distance(z, y);
    const auto count = all_geodesics(x, y).paths.size();
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const auto& m = maps[k];
      const auto g = all_geodesics(m(x), m(y));
      bad_mod += g.length != d || g.paths.size() != count;
    }
  }
  o.expect(bad_sym == 0, std::to_string(bad_sym) + " symmetry failures");
  o.expect(bad_tri == 0, std::to_string(bad_tri) + " triangle failures");
  o.expect(bad_mod == 0, std::to_string(bad_mod) + " invariance failures");
  o.ms = ms_since(start);
  if (o.ok) o.detail = "1000 pairs x 100 maps";
  return o;
}

}  // namespace

int main() {
  report(1, "cf 79/182 and eval 2,3,3,2,3", criterion_cf(), 1.0);
  report(2, "ladder(1/0,19/42): type, pivots, spine", criterion_ladder(), 1.0);
  report(3, "entries in {3,4,5}: distance n, unique spine", criterion_keen_family(), 30'000.0);
  report(4, "oracle agreement, q <= 200", criterion_oracle(), 120'000.0);
  report(5, "geodesics 1/0 -> 1/2 and S(2,1) not strongly keen", criterion_half(), 1'000.0);
  report(6, "classify_03 cases", criterion_classify_03(), 1'000.0);
  report(7, "splitting_distance_02(S(1,0)) = 1", criterion_unknot(), 1'000.0);
  report(8, "symmetry, triangle inequality, modular invariance", criterion_metric(), 60'000.0);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
