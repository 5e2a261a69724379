#include "farey/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "farey/bridge.hpp"
#include "farey/config.hpp"
#include "farey/errors.hpp"
#include "farey/farey_graph.hpp"
#include "farey/json_io.hpp"
#include "farey/oracle.hpp"
#include "farey/render.hpp"

namespace farey::cli {

namespace {

using json_io::Json;

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool oracle = false;
  std::size_t ladder_cap = 0;
  std::size_t geo_cap = 0;
  Caps caps;
};

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string join_path(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += ' ';
    s += p.vertices[i].str();
  }
  return s;
}

void check_distance(const ExtendedRational& x, const ExtendedRational& y, std::size_t ours) {
  const auto truth = oracle::stabilized_distance(x, y);
  if (truth != ours) {
    throw OracleMismatch("distance " + x.str() + " -> " + y.str() + ": ladder " + std::to_string(ours) +
                         ", oracle " + std::to_string(truth));
  }
}

void check_geodesics(const GeodesicSet& ours) {
  const auto stable = oracle::stabilize(ours.source, ours.target);
  const auto theirs = oracle::bruteforce_geodesics(ours.source, ours.target, stable.bound);
  if (theirs.length != ours.length || theirs.paths != ours.paths) {
    throw OracleMismatch("geodesics " + ours.source.str() + " -> " + ours.target.str() + ": ladder found " +
                         std::to_string(ours.paths.size()) + " of length " + std::to_string(ours.length) +
                         ", oracle " + std::to_string(theirs.paths.size()) + " of length " +
                         std::to_string(theirs.length));
  }
}

// "q/p" as used by classify-03: the first number is q.
bridge::TwoBridgeLink parse_link(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw DomainError("expected q/p, got '" + text + "'");
  const auto q = ExtendedRational::parse(text.substr(0, slash));
  const auto p = ExtendedRational::parse(text.substr(slash + 1));
  if (!q.is_integer() || !p.is_integer()) throw DomainError("expected integers in '" + text + "'");
  return bridge::TwoBridgeLink(q.num(), p.num());
}

void print_report(std::ostream& out, const bridge::SplittingReport& r) {
  out << "splitting      (" << bridge::to_string(r.kind) << ")\n";
  out << "link           ";
  for (std::size_t i = 0; i < r.summands.size(); ++i) out << (i ? " # " : "") << r.summands[i].str();
  out << '\n';
  out << "distance       " << (r.distance.at_least ? ">= " : "") << r.distance.value << '\n';
  out << "case           " << bridge::to_string(r.tag) << '\n';
  out << "keen           " << (r.keen ? "true" : "false") << '\n';
  out << "strongly_keen  " << (r.strongly_keen ? "true" : "false") << '\n';
  if (r.geodesics) {
    for (const auto& p : r.geodesics->paths) out << "geodesic       " << join_path(p) << '\n';
  }
  out << "basis          " << r.basis << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Farey graph geodesics and bridge splittings of 2-bridge links", "farey"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print the versioned JSON document instead of text");
  app.add_flag("--oracle", opt.oracle, "Re-check distances and geodesics against the brute-force oracle");
  app.add_option("--ladder-cap", opt.ladder_cap, "Maximum ladder vertices (default FAREY_LADDER_CAP or 1000000)");
  app.add_option("--geo-cap", opt.geo_cap, "Maximum geodesics to enumerate (default FAREY_GEO_CAP or 100000)");

  std::string slope_a, slope_b, text;
  std::string q_text, p_text;
  std::vector<std::string> links;
  std::string render_mode = "ascii";
  std::size_t n = 0;
  std::string entries_text;
  bool with_geodesics = false;

  auto* cf = app.add_subcommand("cf", "Continued fraction of a slope in [0,1)");
  cf->add_option("slope", slope_a, "p/q")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate a continued fraction a1,a2,...");
  eval->add_option("entries", text, "Comma-separated positive integers")->required();
  auto* dist = app.add_subcommand("distance", "Farey distance between two slopes");
  dist->add_option("x", slope_a)->required();
  dist->add_option("y", slope_b)->required();
  auto* geo = app.add_subcommand("geodesics", "All geodesics between two slopes");
  geo->add_option("x", slope_a)->required();
  geo->add_option("y", slope_b)->required();
  auto* lad = app.add_subcommand("ladder", "Ladder of two non-adjacent slopes");
  lad->add_option("x", slope_a)->required();
  lad->add_option("y", slope_b)->required();
  lad->add_option("--render", render_mode, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  auto* c2 = app.add_subcommand("classify-2bridge", "Distance and keenness of the (0,2)-splitting of S(q,p)");
  c2->add_option("q", q_text)->required();
  c2->add_option("p", p_text)->required();
  c2->add_flag("--geodesics", with_geodesics, "List the geodesics realizing the distance");
  auto* c3 = app.add_subcommand("classify-03", "Distance and keenness of the (0,3)-splitting of a connected sum");
  c3->add_option("links", links, "q1/p1 [q2/p2]")->required()->expected(1, 2);
  auto* gen = app.add_subcommand("gen-keen", "2-bridge link whose (0,2)-splitting is strongly keen of distance n");
  gen->add_option("n", n)->required();
  gen->add_option("--entries", entries_text, "Comma-separated entries, each >= 3");
  for (auto* sub : {cf, eval, dist, geo, lad, c2, c3, gen}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "farey: " << e.what() << '\n' << "run 'farey --help' for usage\n";
    return kUsageError;
  }

  try {
    opt.caps = Caps::from_env();
    if (opt.ladder_cap) opt.caps.ladder_vertices = opt.ladder_cap;
    if (opt.geo_cap) opt.caps.geodesics = opt.geo_cap;
    const Caps& caps = opt.caps;

    if (*cf) {
      const auto x = ExtendedRational::parse(slope_a);
      const auto expansion = cf_expand(x);
      if (opt.json) {
        Json j{{"v", json_io::kSchemaVersion}, {"slope", json_io::encode(x)}, {"cf", json_io::encode(expansion)}};
        emit(out, j);
      } else {
        out << expansion.str() << '\n';
      }
    } else if (*eval) {
      const auto expansion = ContinuedFraction::parse(text);
      const auto x = cf_eval(expansion);
      if (opt.json) {
        Json j{{"v", json_io::kSchemaVersion}, {"cf", json_io::encode(expansion)}, {"slope", json_io::encode(x)}};
        emit(out, j);
      } else {
        out << x.str() << '\n';
      }
    } else if (*dist) {
      const auto x = ExtendedRational::parse(slope_a);
      const auto y = ExtendedRational::parse(slope_b);
      const auto d = distance(x, y, caps);
      if (opt.oracle) check_distance(x, y, d);
      if (opt.json) {
        Json j{{"v", json_io::kSchemaVersion}, {"source", json_io::encode(x)}, {"target", json_io::encode(y)},
               {"distance", d}};
        emit(out, j);
      } else {
        out << d << '\n';
      }
    } else if (*geo) {
      const auto set = all_geodesics(ExtendedRational::parse(slope_a), ExtendedRational::parse(slope_b), caps);
      if (opt.oracle) check_geodesics(set);
      if (opt.json) {
        emit(out, json_io::encode(set));
      } else {
        out << "distance " << set.length << ", " << set.paths.size() << (set.paths.size() == 1 ? " geodesic" : " geodesics")
            << '\n';
        for (const auto& p : set.paths) out << join_path(p) << '\n';
      }
    } else if (*lad) {
      const auto l = ladder(ExtendedRational::parse(slope_a), ExtendedRational::parse(slope_b), caps);
      if (opt.json) {
        emit(out, json_io::encode(json_io::LadderSummary::of(l)));
      } else if (render_mode == "svg") {
        out << render::svg(l);
      } else {
        out << render::ascii(l);
      }
    } else if (*c2) {
      const auto q = ExtendedRational::parse(q_text);
      const auto p = ExtendedRational::parse(p_text);
      if (!q.is_integer() || !p.is_integer()) throw DomainError("q and p must be integers");
      const bridge::TwoBridgeLink link(q.num(), p.num());
      const auto report = bridge::classify_02(link, caps, with_geodesics || opt.oracle);
      if (opt.oracle) {
        check_distance(ExtendedRational::infinity(), link.slope(), report.distance.value);
        check_geodesics(*report.geodesics);
      }
      if (opt.json) {
        emit(out, json_io::encode(report));
      } else {
        print_report(out, report);
      }
    } else if (*c3) {
      std::vector<bridge::TwoBridgeLink> summands;
      for (const auto& s : links) summands.push_back(parse_link(s));
      const auto report = bridge::classify_03(bridge::CompositeLink(std::move(summands)));
      if (opt.json) {
        emit(out, json_io::encode(report));
      } else {
        print_report(out, report);
      }
    } else if (*gen) {
      std::optional<std::vector<Integer>> entries;
      if (!entries_text.empty()) entries = parse_integer_list(entries_text);
      const auto link = bridge::make_strongly_keen_example(n, entries);
      const auto d = bridge::splitting_distance_02(link, caps);
      const bool unique = bridge::is_strongly_keen_02(link, caps);
      if (opt.oracle) {
        check_distance(ExtendedRational::infinity(), link.slope(), d);
        check_geodesics(all_geodesics(ExtendedRational::infinity(), link.slope(), caps));
      }
      const auto expansion = cf_expand(link.slope());
      if (opt.json) {
        Json j{{"v", json_io::kSchemaVersion},
               {"n", n},
               {"entries", json_io::encode(expansion)},
               {"q", json_io::encode(link.q())},
               {"p", json_io::encode(link.p())},
               {"slope", json_io::encode(link.slope())},
               {"distance", d},
               {"strongly_keen", unique}};
        emit(out, j);
      } else {
        out << link.str() << " slope " << link.slope().str() << " cf " << expansion.str() << " distance " << d
            << (unique ? " strongly keen" : " not strongly keen") << '\n';
      }
    }
  } catch (const OracleMismatch& e) {
    err << "farey: oracle mismatch: " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const ResourceError& e) {
    err << "farey: " << e.what() << '\n';
    return kResourceError;
  } catch (const DomainError& e) {
    err << "farey: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace farey::cli
