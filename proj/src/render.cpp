#include "farey/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace farey::render {

namespace {

std::string join(const std::vector<ExtendedRational>& vs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += vs[i].str();
  }
  return out;
}

std::string type_string(const std::vector<std::size_t>& runs) {
  std::string out = "(";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(runs[i]);
  }
  return out + ")";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

struct Layout {
  std::vector<double> x;
  std::vector<double> y;
  double width = 0;
  double height = 0;
};

Layout lay_out(const Ladder& l) {
  constexpr double kMargin = 40, kStep = 60, kTop = 50, kBottom = 170;
  const auto n = l.vertices().size();
  const auto t = l.triangles().size();
  std::vector<std::size_t> first(n, std::numeric_limits<std::size_t>::max()), last(n, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (const auto c : l.triangles()[i].corners) {
      first[c] = std::min(first[c], i);
      last[c] = std::max(last[c], i);
    }
  }
  // Rails follow the normalized frame: vertices below p/q on one side, above it on the other.
  const auto& frame = l.frame();
  Layout out;
  out.x.resize(n);
  out.y.resize(n);
  out.width = 2 * kMargin + kStep * static_cast<double>(t);
  out.height = kBottom + kMargin;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == 0 || v + 1 == n) {
      out.x[v] = v == 0 ? kMargin : kMargin + kStep * static_cast<double>(t);
      out.y[v] = (kTop + kBottom) / 2;
      continue;
    }
    const double centre = (static_cast<double>(first[v]) + static_cast<double>(last[v])) / 2 + 0.5;
    out.x[v] = kMargin + kStep * centre;
    const bool below = ExtendedRational::compare_value(frame.map(l.vertices()[v]), frame.image) < 0;
    out.y[v] = below ? kBottom : kTop;
  }
  return out;
}

}  // namespace

std::string ascii(const Ladder& l) {
  std::ostringstream os;
  os << "ladder " << l.source().str() << " -> " << l.target().str() << '\n';
  os << "type   " << type_string(ladder_type(l)) << '\n';
  os << "labels " << l.labels() << '\n';
  for (std::size_t i = 0; i < l.triangles().size(); ++i) {
    const auto c = l.corner_values(i);
    os << "  " << (i + 1) << "  " << (l.triangles()[i].label == Side::L ? 'L' : 'R') << "  " << c[0].str() << ' '
       << c[1].str() << ' ' << c[2].str() << '\n';
  }
  os << "pivots " << join(l.pivots(), " ") << '\n';
  if (l.triangles().size() >= 3) {
    os << "spine  " << join(spine(l).vertices, " -> ") << '\n';
  } else {
    os << "spine  undefined (fewer than three triangles)\n";
  }
  return os.str();
}

std::string svg(const Ladder& l) {
  const Layout at = lay_out(l);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(at.width) << "\" height=\"" << fmt(at.height)
     << "\" viewBox=\"0 0 " << fmt(at.width) << ' ' << fmt(at.height) << "\">\n";
  os << "<title>ladder " << l.source().str() << " to " << l.target().str() << " of type "
     << type_string(ladder_type(l)) << "</title>\n";
  os << "<style>.triangle{stroke:#222;stroke-width:1}.L{fill:#cfe3f7}.R{fill:#f7dccf}"
        ".pivot{fill:#c00}.vertex{fill:#222}.spine{fill:none;stroke:#c00;stroke-width:3}"
        "text{font:11px sans-serif}</style>\n";
  for (std::size_t i = 0; i < l.triangles().size(); ++i) {
    const auto& t = l.triangles()[i];
    const char* side = t.label == Side::L ? "L" : "R";
    os << "<polygon class=\"triangle " << side << "\" points=\"";
    double cx = 0, cy = 0;
    for (int k = 0; k < 3; ++k) {
      const auto v = t.corners[k];
      os << (k ? " " : "") << fmt(at.x[v]) << ',' << fmt(at.y[v]);
      cx += at.x[v] / 3;
      cy += at.y[v] / 3;
    }
    os << "\"/>\n";
    os << "<text x=\"" << fmt(cx - 3) << "\" y=\"" << fmt(cy + 4) << "\">" << side << "</text>\n";
  }
  if (l.triangles().size() >= 3) {
    os << "<polyline class=\"spine\" points=\"" << fmt(at.x.front()) << ',' << fmt(at.y.front());
    for (const auto id : l.pivot_ids()) os << ' ' << fmt(at.x[id]) << ',' << fmt(at.y[id]);
    os << ' ' << fmt(at.x.back()) << ',' << fmt(at.y.back()) << "\"/>\n";
  }
  std::vector<bool> is_pivot(l.vertices().size(), false);
  for (const auto id : l.pivot_ids()) is_pivot[id] = true;
  for (std::size_t v = 0; v < l.vertices().size(); ++v) {
    os << "<circle class=\"" << (is_pivot[v] ? "pivot" : "vertex") << "\" cx=\"" << fmt(at.x[v]) << "\" cy=\""
       << fmt(at.y[v]) << "\" r=\"" << (is_pivot[v] ? 5 : 3) << "\"/>\n";
    const double dy = at.y[v] < 100 ? -10 : 18;
    os << "<text x=\"" << fmt(at.x[v] - 10) << "\" y=\"" << fmt(at.y[v] + dy) << "\">" << l.vertices()[v].str()
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace farey::render
