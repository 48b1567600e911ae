#include "bicentric/geometry.hpp"

#include <algorithm>
#include <limits>

namespace bicentric {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::PointInsideCircle: return "PointInsideCircle";
    case ErrorCode::PointOnCircle: return "PointOnCircle";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::VertexInsideC: return "VertexInsideC";
    case ErrorCode::VertexOnC: return "VertexOnC";
    case ErrorCode::AmbiguousTangent: return "AmbiguousTangent";
    case ErrorCode::PorismViolation: return "PorismViolation";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NonMonotonic: return "NonMonotonic";
    case ErrorCode::PoleAtDEqualsRK: return "PoleAtDEqualsRK";
    case ErrorCode::ParallelBisectors: return "ParallelBisectors";
    case ErrorCode::TangencyViolation: return "TangencyViolation";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DegenerateE: return "DegenerateE";
    case ErrorCode::NoChord: return "NoChord";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantError: return "InvariantError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

double angle_of(Point2 p) {
  double a = std::atan2(p.y, p.x);
  if (a < 0.0) a += kTwoPi;
  return a;
}

double fold_positive(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

namespace {

// Flushes -0.0 to +0.0 so canonical lines serialize identically.
inline double canon_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

Line make_line(Point2 normal_dir, Point2 through) {
  const double len = norm(normal_dir);
  double nx = normal_dir.x / len;
  double ny = normal_dir.y / len;
  // Canonical sign: first nonzero normal component positive.
  if (nx < 0.0 || (nx == 0.0 && ny < 0.0)) {
    nx = -nx;
    ny = -ny;
  }
  Line l;
  l.normal_x = canon_zero(nx);
  l.normal_y = canon_zero(ny);
  l.offset = canon_zero(l.normal_x * through.x + l.normal_y * through.y);
  return l;
}

Line line_through(Point2 p, Point2 q, double eps_rel) {
  const double scale = std::max({1.0, norm(p), norm(q)});
  if (distance(p, q) <= eps_rel * scale) {
    raise(ErrorCode::DegenerateInput, "line_through: points coincide");
  }
  // The midpoint is symmetric in (p, q), which makes line_through(p, q) and
  // line_through(q, p) bit-identical after canonicalization.
  const Point2 mid = {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
  return make_line(perp(q - p), mid);
}

Point2 line_line_intersection(const Line& a, const Line& b, double eps_par, ErrorCode on_parallel) {
  const double det = a.normal_x * b.normal_y - a.normal_y * b.normal_x;
  if (std::abs(det) <= eps_par) {
    raise(on_parallel, "line_line_intersection: lines are parallel");
  }
  return {(a.offset * b.normal_y - b.offset * a.normal_y) / det,
          (a.normal_x * b.offset - b.normal_x * a.offset) / det};
}

TangentLines tangent_lines_from_point(const Circle& c, Point2 p, double eps_tan) {
  const Point2 v = p - c.center;
  const double dist = norm(v);
  const double r = c.radius;
  if (std::abs(dist - r) <= eps_tan * r) {
    raise(ErrorCode::PointOnCircle, "tangent_lines_from_point: point lies on the circle");
  }
  if (dist <= r * (1.0 + eps_tan)) {
    raise(ErrorCode::PointInsideCircle, "tangent_lines_from_point: point lies inside the circle");
  }
  const Point2 u = (1.0 / dist) * v;
  const Point2 w = perp(u);
  const double cos_a = r / dist;
  const double sin_a = std::sqrt(std::max(0.0, 1.0 - cos_a * cos_a));

  TangentLines out;
  out.first_tangency = c.center + r * (cos_a * u + sin_a * w);
  out.second_tangency = c.center + (r * cos_a) * u - (r * sin_a) * w;
  // The tangent's normal is the radial direction at the tangency point.
  out.first = make_line(out.first_tangency - c.center, out.first_tangency);
  out.second = make_line(out.second_tangency - c.center, out.second_tangency);
  return out;
}

std::vector<Point2> line_circle_intersection(const Line& l, const Circle& c, double eps_tan) {
  const double s = signed_distance(c.center, l);
  const Point2 foot = {c.center.x - s * l.normal_x, c.center.y - s * l.normal_y};
  const double r = c.radius;

  if (std::abs(std::abs(s) - r) <= eps_tan * r) {
    return {foot};
  }
  if (std::abs(s) > r) {
    return {};
  }
  const double h = std::sqrt(std::max(0.0, r * r - s * s));
  const Point2 dir = line_direction(l);
  Point2 a = foot + h * dir;
  Point2 b = foot - h * dir;
  if (angle_of(a - c.center) > angle_of(b - c.center)) std::swap(a, b);
  return {a, b};
}

Circle circumcircle(Point2 p1, Point2 p2, Point2 p3, double eps_rel) {
  const Point2 b = p2 - p1;
  const Point2 c = p3 - p1;
  const double max_d = std::max({norm(b), norm(c), distance(p2, p3)});
  const double area = 0.5 * std::abs(cross(b, c));
  if (area < eps_rel * max_d * max_d) {
    raise(ErrorCode::CollinearPoints, "circumcircle: points are collinear");
  }
  const double d = 2.0 * cross(b, c);
  const double b2 = dot(b, b);
  const double c2 = dot(c, c);
  const Point2 rel = {(c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d};
  Circle out;
  out.center = p1 + rel;
  out.radius = (distance(out.center, p1) + distance(out.center, p2) + distance(out.center, p3)) / 3.0;
  return out;
}

FitResult fit_circle(const std::vector<Point2>& points, double eps_rel) {
  const size_t n = points.size();
  if (n < 3) {
    raise(ErrorCode::InvalidArgument, "fit_circle: need at least 3 points");
  }

  // Collinearity gate: circumcircle's criterion on the extremal triple (the
  // farthest pair plus the point farthest from their connecting line).
  size_t ei = 0, ej = 1;
  double max_d = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double d = distance(points[i], points[j]);
      if (d > max_d) {
        max_d = d;
        ei = i;
        ej = j;
      }
    }
  }
  if (max_d <= eps_rel) {
    raise(ErrorCode::CollinearPoints, "fit_circle: points coincide");
  }
  const Line base = line_through(points[ei], points[ej], eps_rel);
  double max_h = 0.0;
  for (size_t k = 0; k < n; ++k) {
    max_h = std::max(max_h, distance_point_line(points[k], base));
  }
  const double area = 0.5 * max_d * max_h;
  if (area < eps_rel * max_d * max_d) {
    raise(ErrorCode::CollinearPoints, "fit_circle: points are collinear");
  }

  // Kasa fit on centroid-shifted coordinates: minimize
  // sum (x^2 + y^2 - 2 a x - 2 b y - c)^2, linear in (a, b, c).
  double mx = 0.0, my = 0.0;
  for (const Point2& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0, sxz = 0.0, syz = 0.0, sz = 0.0;
  for (const Point2& p : points) {
    const double x = p.x - mx;
    const double y = p.y - my;
    const double z = x * x + y * y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    sxz += x * z;
    syz += y * z;
    sz += z;
  }
  const double det = sxx * syy - sxy * sxy;
  if (!(std::abs(det) > 0.0)) {
    raise(ErrorCode::CollinearPoints, "fit_circle: normal equations are singular");
  }
  const double a = 0.5 * (sxz * syy - syz * sxy) / det;
  const double b = 0.5 * (sxx * syz - sxy * sxz) / det;
  const double cc = sz / static_cast<double>(n);
  const double r2 = cc + a * a + b * b;

  FitResult out;
  out.circle.center = {a + mx, b + my};
  out.circle.radius = std::sqrt(std::max(0.0, r2));

  double sum_sq = 0.0;
  double max_r = 0.0;
  for (const Point2& p : points) {
    const double res = std::abs(distance(p, out.circle.center) - out.circle.radius);
    sum_sq += res * res;
    max_r = std::max(max_r, res);
  }
  out.rms_residual = std::sqrt(sum_sq / static_cast<double>(n));
  out.max_residual = max_r;
  return out;
}

double shoelace_area(const std::vector<Point2>& vertices) {
  const size_t n = vertices.size();
  double twice = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Point2& p = vertices[i];
    const Point2& q = vertices[(i + 1) % n];
    twice += cross(p, q);
  }
  return 0.5 * twice;
}

}  // namespace bicentric
