#include "farey/json_io.hpp"

#include "farey/errors.hpp"

namespace farey::json_io {

namespace {

Json versioned() {
  Json j = Json::object();
  j["v"] = kSchemaVersion;
  return j;
}

template <class T, class F>
std::vector<T> decode_array(const Json& j, F&& decode_item) {
  if (!j.is_array()) throw DomainError("expected a JSON array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(decode_item(item));
  return out;
}

Json encode_link(const bridge::TwoBridgeLink& link) {
  Json j = Json::object();
  j["q"] = encode(link.q());
  j["p"] = encode(link.p());
  return j;
}

}  // namespace

Json encode(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str(10);
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
  if (j.is_string()) return ExtendedRational::parse(j.get<std::string>()).num();
  throw DomainError("expected an integer, got " + j.dump());
}

Json encode(const ExtendedRational& x) { return x.str(); }

ExtendedRational decode_slope(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a slope string, got " + j.dump());
  return ExtendedRational::parse(j.get<std::string>());
}

Json encode(const ContinuedFraction& cf) {
  Json j = Json::array();
  for (const auto& a : cf.entries()) j.push_back(encode(a));
  return j;
}

ContinuedFraction decode_cf(const Json& j) { return ContinuedFraction(decode_array<Integer>(j, decode_integer)); }

Json encode(const Path& path) {
  Json j = Json::array();
  for (const auto& v : path.vertices) j.push_back(encode(v));
  return j;
}

Path decode_path(const Json& j) { return Path{decode_array<ExtendedRational>(j, decode_slope)}; }

Json encode(const GeodesicSet& set) {
  Json j = versioned();
  j["source"] = encode(set.source);
  j["target"] = encode(set.target);
  j["distance"] = set.length;
  j["unique"] = set.paths.size() == 1;
  j["count"] = set.paths.size();
  Json paths = Json::array();
  for (const auto& p : set.paths) paths.push_back(encode(p));
  j["geodesics"] = std::move(paths);
  return j;
}

GeodesicSet decode_geodesics(const Json& j) {
  check_version(j);
  GeodesicSet set;
  set.source = decode_slope(j.at("source"));
  set.target = decode_slope(j.at("target"));
  set.length = j.at("distance").get<std::size_t>();
  set.paths = decode_array<Path>(j.at("geodesics"), decode_path);
  return set;
}

LadderSummary LadderSummary::of(const Ladder& l) {
  LadderSummary s;
  s.source = l.source();
  s.target = l.target();
  s.type = ladder_type(l);
  s.labels = l.labels();
  s.triangles.reserve(l.triangles().size());
  for (std::size_t i = 0; i < l.triangles().size(); ++i) s.triangles.push_back(l.corner_values(i));
  s.pivots = l.pivots();
  if (l.triangles().size() >= 3) s.spine = farey::spine(l);
  return s;
}

Json encode(const LadderSummary& ladder) {
  Json j = versioned();
  j["source"] = encode(ladder.source);
  j["target"] = encode(ladder.target);
  j["type"] = ladder.type;
  j["labels"] = ladder.labels;
  Json triangles = Json::array();
  for (const auto& t : ladder.triangles) triangles.push_back(Json::array({encode(t[0]), encode(t[1]), encode(t[2])}));
  j["triangles"] = std::move(triangles);
  Json pivots = Json::array();
  for (const auto& p : ladder.pivots) pivots.push_back(encode(p));
  j["pivots"] = std::move(pivots);
  j["spine"] = ladder.spine ? encode(*ladder.spine) : Json(nullptr);
  return j;
}

LadderSummary decode_ladder(const Json& j) {
  check_version(j);
  LadderSummary s;
  s.source = decode_slope(j.at("source"));
  s.target = decode_slope(j.at("target"));
  s.type = j.at("type").get<std::vector<std::size_t>>();
  s.labels = j.at("labels").get<std::string>();
  s.triangles = decode_array<std::array<ExtendedRational, 3>>(j.at("triangles"), [](const Json& t) {
    if (!t.is_array() || t.size() != 3) throw DomainError("a triangle needs three slopes");
    return std::array<ExtendedRational, 3>{decode_slope(t[0]), decode_slope(t[1]), decode_slope(t[2])};
  });
  s.pivots = decode_array<ExtendedRational>(j.at("pivots"), decode_slope);
  if (!j.at("spine").is_null()) s.spine = decode_path(j.at("spine"));
  return s;
}

Json encode(const bridge::SplittingReport& report) {
  Json j = versioned();
  j["splitting"] = bridge::to_string(report.kind);
  Json summands = Json::array();
  for (const auto& s : report.summands) summands.push_back(encode_link(s));
  j["summands"] = std::move(summands);
  j["distance"] = report.distance.value;
  j["distance_is_lower_bound"] = report.distance.at_least;
  j["case"] = bridge::to_string(report.tag);
  j["keen"] = report.keen;
  j["strongly_keen"] = report.strongly_keen;
  j["basis"] = report.basis;
  if (report.geodesics) {
    j["unique"] = report.geodesics->paths.size() == 1;
    Json paths = Json::array();
    for (const auto& p : report.geodesics->paths) paths.push_back(encode(p));
    j["geodesics"] = std::move(paths);
  }
  return j;
}

bridge::SplittingReport decode_report(const Json& j) {
  check_version(j);
  bridge::SplittingReport r;
  r.kind = bridge::splitting_from_string(j.at("splitting").get<std::string>());
  r.summands = decode_array<bridge::TwoBridgeLink>(j.at("summands"), [](const Json& s) {
    return bridge::TwoBridgeLink(decode_integer(s.at("q")), decode_integer(s.at("p")));
  });
  r.distance = {j.at("distance").get<std::size_t>(), j.at("distance_is_lower_bound").get<bool>()};
  r.tag = bridge::case_tag_from_string(j.at("case").get<std::string>());
  r.keen = j.at("keen").get<bool>();
  r.strongly_keen = j.at("strongly_keen").get<bool>();
  r.basis = j.at("basis").get<std::string>();
  if (j.contains("geodesics")) {
    GeodesicSet set;
    set.paths = decode_array<Path>(j.at("geodesics"), decode_path);
    if (r.summands.size() == 1) {
      set.source = ExtendedRational::infinity();
      set.target = r.summands.front().slope();
    }
    set.length = r.distance.value;
    r.geodesics = std::move(set);
  }
  return r;
}

void check_version(const Json& j) {
  if (!j.is_object() || !j.contains("v") || j.at("v") != kSchemaVersion) {
    throw DomainError("expected a version " + std::to_string(kSchemaVersion) + " document");
  }
}

}  // namespace farey::json_io
