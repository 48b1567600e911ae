#include "bicentric/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bicentric {

namespace {

constexpr const char* kColorK = "#006400";
constexpr const char* kColorC = "#0000ff";
constexpr const char* kColorE = "#ff0000";
constexpr const char* kColorPolygon = "#993300";
constexpr const char* kColorExcircle = "#ff8c00";
constexpr const char* kColorBisector = "#000000";

struct Box {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;

  void include(const Circle& c) {
    min_x = std::min(min_x, c.center.x - c.radius);
    max_x = std::max(max_x, c.center.x + c.radius);
    min_y = std::min(min_y, c.center.y - c.radius);
    max_y = std::max(max_y, c.center.y + c.radius);
  }
};

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  out += buf;
}

// Geometry is y-up; SVG is y-down, so every y coordinate is emitted negated.
void append_xy(std::string& out, const char* xk, const char* yk, Point2 p) {
  out += xk;
  append_num(out, p.x);
  out += '"';
  out += yk;
  append_num(out, -p.y);
  out += '"';
}

void append_stroked_circle(std::string& out, const Circle& c, const char* color, double width) {
  out += "<circle ";
  append_xy(out, "cx=\"", " cy=\"", c.center);
  out += " r=\"";
  append_num(out, c.radius);
  out += "\" fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"";
  append_num(out, width);
  out += "\"/>\n";
}

void append_segment(std::string& out, Point2 a, Point2 b, const char* color, double width) {
  out += "<line ";
  append_xy(out, "x1=\"", " y1=\"", a);
  out += ' ';
  append_xy(out, "x2=\"", " y2=\"", b);
  out += " stroke=\"";
  out += color;
  out += "\" stroke-width=\"";
  append_num(out, width);
  out += "\"/>\n";
}

// Point markers are rects on purpose: the circle-element count of the file
// then states exactly how many true circles are drawn.
void append_marker(std::string& out, Point2 p, const char* color, double half) {
  out += "<rect x=\"";
  append_num(out, p.x - half);
  out += "\" y=\"";
  append_num(out, -p.y - half);
  out += "\" width=\"";
  append_num(out, 2.0 * half);
  out += "\" height=\"";
  append_num(out, 2.0 * half);
  out += "\" fill=\"";
  out += color;
  out += "\"/>\n";
}

}  // namespace

std::string render_svg(const BicentricScene& scene, const RenderOptions& options) {
  if (options.width_px < 1) {
    raise(ErrorCode::InvalidArgument, "render_svg: width must be at least 1 pixel");
  }
  const BicentricPolygon& poly = scene.polygon;
  const std::size_t n = poly.vertices.size();

  Box box{poly.pair.k.center.x - poly.pair.k.radius, poly.pair.k.center.y - poly.pair.k.radius,
          poly.pair.k.center.x + poly.pair.k.radius, poly.pair.k.center.y + poly.pair.k.radius};
  box.include(poly.pair.c);
  box.include(scene.predicted_e);
  for (const Circle& c : scene.excenters.excircles) box.include(c);

  const double margin = 0.05 * std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  box.min_x -= margin;
  box.min_y -= margin;
  box.max_x += margin;
  box.max_y += margin;
  const double bw = box.max_x - box.min_x;
  const double bh = box.max_y - box.min_y;
  const int height_px = std::max(1, static_cast<int>(std::lround(options.width_px * bh / bw)));

  // Stroke and marker sizes expressed in user units so they land at a fixed
  // pixel size for the requested output width.
  const double px = bw / options.width_px;
  const double stroke = 1.5 * px;
  const double thin = 0.5 * px;
  const double half_marker = 3.0 * px;

  std::string out;
  out.reserve(8192);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  out += std::to_string(options.width_px);
  out += "\" height=\"";
  out += std::to_string(height_px);
  out += "\" viewBox=\"";
  append_num(out, box.min_x);
  out += ' ';
  append_num(out, -box.max_y);
  out += ' ';
  append_num(out, bw);
  out += ' ';
  append_num(out, bh);
  out += "\">\n";

  // circles
  append_stroked_circle(out, poly.pair.k, kColorK, stroke);
  append_stroked_circle(out, poly.pair.c, kColorC, stroke);
  append_stroked_circle(out, scene.predicted_e, kColorE, stroke);
  if (options.show_excircles) {
    for (const Circle& c : scene.excenters.excircles) {
      append_stroked_circle(out, c, kColorExcircle, stroke);
    }
  }

  // sides: each drawn over the parameter span of its two vertices and its
  // tangency point, so the tangency stays visible even when it falls outside
  // the vertex-to-vertex stretch.
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly.vertices[i];
    const Point2 b = poly.vertices[(i + 1) % n];
    const Point2 t = poly.tangency_points[i];
    const Point2 dir = line_direction(poly.sides[i]);
    const double tb = dot(b - a, dir);
    const double tt = dot(t - a, dir);
    const double lo = std::min({0.0, tb, tt});
    const double hi = std::max({0.0, tb, tt});
    append_segment(out, a + lo * dir, a + hi * dir, kColorPolygon, stroke);
  }

  if (options.show_bisectors) {
    // The bisector line at vertex i carries the two neighboring excenters, so
    // that segment draws the construction through the vertex.
    for (std::size_t i = 0; i < n; ++i) {
      append_segment(out, scene.excenters.excenters[(i + n - 1) % n], scene.excenters.excenters[i],
                     kColorBisector, thin);
    }
  }

  // points
  for (const Point2& v : poly.vertices) append_marker(out, v, kColorPolygon, half_marker);
  for (const Point2& t : poly.tangency_points) append_marker(out, t, kColorC, half_marker);
  for (const Point2& m : scene.excenters.excenters) append_marker(out, m, kColorExcircle, half_marker);
  append_marker(out, poly.pair.k.center, kColorK, half_marker);
  append_marker(out, poly.pair.c.center, kColorC, half_marker);
  append_marker(out, scene.predicted_e.center, kColorE, half_marker);

  out += "</svg>\n";
  return out;
}

}  // namespace bicentric
