#include "lozenge/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace lozenge {

namespace {

constexpr double kMargin = 10.0;
const double kRowHeight = kSvgUnit * std::sqrt(3.0) / 2.0;

struct Point {
  double x, y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double min_x = 0, min_y = 0, width = 0, height = 0;

  Point place(const LatticePoint& p) const {
    return {kMargin + (p.i - 0.5 * p.r) * kSvgUnit - min_x, kMargin + p.r * kRowHeight - min_y};
  }
};

Frame frame_of(const Region& r) {
  Frame f;
  if (r.empty()) {
    f.width = f.height = 2 * kMargin;
    return f;
  }
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const TriCell& c : r.cells())
    for (const LatticePoint& p : corners(c)) {
      const double x = (p.i - 0.5 * p.r) * kSvgUnit, y = p.r * kRowHeight;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  f.min_x = x0;
  f.min_y = y0;
  f.width = x1 - x0 + 2 * kMargin;
  f.height = y1 - y0 + 2 * kMargin;
  return f;
}

std::string points_attr(const Frame& f, const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const LatticePoint& p : pts) {
    const Point q = f.place(p);
    if (!s.empty()) s += ' ';
    s += fmt(q.x) + "," + fmt(q.y);
  }
  return s;
}

// The four corners of a lozenge in boundary order.
std::vector<LatticePoint> lozenge_outline(const Lozenge& l) {
  const auto u = corners(l.up);
  const auto d = corners(l.down);
  const LatticePoint* extra = nullptr;
  for (const LatticePoint& p : d)
    if (std::find(u.begin(), u.end(), p) == u.end()) extra = &p;
  // Insert the Down cell's far corner between the two shared corners.
  std::vector<LatticePoint> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out.push_back(u[k]);
    const LatticePoint& next = u[(k + 1) % 3];
    const bool shared = std::find(d.begin(), d.end(), u[k]) != d.end() &&
                        std::find(d.begin(), d.end(), next) != d.end();
    if (shared) out.push_back(*extra);
  }
  return out;
}

const char* lozenge_fill(const Lozenge& l) {
  if (l.vertical()) return "#f2c14e";
  return l.down.col == l.up.col ? "#5b8fb9" : "#9bc995";
}

Point centre(const Frame& f, const Lozenge& l) {
  double x = 0, y = 0;
  for (const TriCell& c : {l.up, l.down})
    for (const LatticePoint& p : corners(c)) {
      const Point q = f.place(p);
      x += q.x;
      y += q.y;
    }
  return {x / 6, y / 6};
}

}  // namespace

std::string render_svg(const Region& r, const std::optional<Tiling>& tiling) {
  const Frame f = frame_of(r);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(f.width) << "\" height=\""
      << fmt(f.height) << "\" viewBox=\"0 0 " << fmt(f.width) << ' ' << fmt(f.height) << "\">\n";

  out << "<g class=\"grid\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n";
  for (const TriCell& c : r.cells()) {
    const auto cs = corners(c);
    out << "<polygon points=\"" << points_attr(f, {cs.begin(), cs.end()}) << "\"/>\n";
  }
  out << "</g>\n";

  if (tiling) {
    out << "<g class=\"tiling\" stroke=\"#333333\" stroke-width=\"1\">\n";
    for (const Lozenge& l : tiling->lozenges)
      out << "<polygon fill=\"" << lozenge_fill(l) << "\" points=\"" << points_attr(f, lozenge_outline(l))
          << "\"/>\n";
    out << "</g>\n";
  }

  const Rational half(1, 2);
  std::vector<Lozenge> halves;
  for (const auto& [l, w] : r.weights())
    if (w == half) halves.push_back(l);
  if (!halves.empty()) {
    out << "<g class=\"weights\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.2\">\n";
    for (const Lozenge& l : halves) {
      const Point p = centre(f, l);
      const bool upright = l.vertical();
      out << "<ellipse cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" rx=\""
          << fmt(upright ? 0.22 * kSvgUnit : 0.4 * kSvgUnit) << "\" ry=\""
          << fmt(upright ? 0.4 * kSvgUnit : 0.22 * kSvgUnit) << "\"/>\n";
    }
    out << "</g>\n";
  }

  // Outline: edges that belong to exactly one cell.
  std::map<std::pair<LatticePoint, LatticePoint>, int> edges;
  for (const TriCell& c : r.cells()) {
    const auto cs = corners(c);
    for (std::size_t k = 0; k < 3; ++k) {
      auto e = std::minmax(cs[k], cs[(k + 1) % 3]);
      ++edges[{e.first, e.second}];
    }
  }
  out << "<g class=\"outline\" stroke=\"#000000\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (const auto& [e, n] : edges) {
    if (n != 1) continue;
    const Point p = f.place(e.first), q = f.place(e.second);
    out << "<line x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\"" << fmt(q.x) << "\" y2=\""
        << fmt(q.y) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace lozenge
