#pragma once

#include <cmath>
#include <vector>

#include "bicentric/error.hpp"

namespace bicentric {

// Default tolerances. Callers may override the defaulted eps parameters of the
// operations below; the values here are the library-wide configuration.
namespace eps {
inline constexpr double degenerate = 1e-12;  // relative to local scale
inline constexpr double tangency = 1e-9;
inline constexpr double parallel = 1e-12;
}  // namespace eps

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 p) { return {-p.y, p.x}; }  // 90 degrees counterclockwise
inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Angle of p measured from +x, folded to [0, 2*pi).
double angle_of(Point2 p);

// Fold an angle to (-pi, pi].
inline double fold_angle(double a) { return std::remainder(a, kTwoPi); }

// Fold an angle to [0, 2*pi).
double fold_positive(double a);

struct Circle {
  Point2 center;
  double radius = 1.0;  // strictly positive and finite
};

// Point on the circle at the given angle from its center.
inline Point2 circle_point(const Circle& c, double angle) {
  return {c.center.x + c.radius * std::cos(angle), c.center.y + c.radius * std::sin(angle)};
}

// Normalized implicit line {p : normal . p = offset}. The unit normal carries a
// canonical sign (first nonzero component positive) so equal lines compare
// equal field for field.
struct Line {
  double normal_x = 0.0;
  double normal_y = 1.0;
  double offset = 0.0;
};

// Builds a canonical Line from an (unnormalized) normal direction and a point
// on the line.
Line make_line(Point2 normal_dir, Point2 through);

inline double signed_distance(Point2 p, const Line& l) {
  return l.normal_x * p.x + l.normal_y * p.y - l.offset;
}

inline double distance_point_line(Point2 p, const Line& l) { return std::abs(signed_distance(p, l)); }

inline Point2 line_direction(const Line& l) { return {-l.normal_y, l.normal_x}; }

// Foot of the perpendicular from p onto l.
inline Point2 project_onto_line(Point2 p, const Line& l) {
  const double s = signed_distance(p, l);
  return {p.x - s * l.normal_x, p.y - s * l.normal_y};
}

struct FitResult {
  Circle circle;
  double rms_residual = 0.0;
  double max_residual = 0.0;
};

struct TangentLines {
  Line first;
  Line second;
  Point2 first_tangency;   // counterclockwise from p as seen from the center
  Point2 second_tangency;
};

// Line through two distinct points. Throws DegenerateInput if the points
// coincide within eps_rel relative to max(1, |p|, |q|).
Line line_through(Point2 p, Point2 q, double eps_rel = eps::degenerate);

// Intersection point of two non-parallel lines. The error code is raised when
// |cross(n1, n2)| <= eps_par.
Point2 line_line_intersection(const Line& a, const Line& b, double eps_par = eps::parallel,
                              ErrorCode on_parallel = ErrorCode::DegenerateInput);

// Tangent lines from an external point to a circle, with their tangency
// points. The first tangency point is counterclockwise from p as seen from the
// circle center.
TangentLines tangent_lines_from_point(const Circle& c, Point2 p, double eps_tan = eps::tangency);

// 0, 1, or 2 intersection points; 2 points are ordered by counterclockwise
// angle about the circle center. Distance within eps_tan*radius of the radius
// counts as tangency and yields exactly 1 point.
std::vector<Point2> line_circle_intersection(const Line& l, const Circle& c,
                                             double eps_tan = eps::tangency);

// Circumcircle of a non-degenerate triangle. Throws CollinearPoints when the
// shoelace area falls below eps_rel * (max pairwise distance)^2.
Circle circumcircle(Point2 p1, Point2 p2, Point2 p3, double eps_rel = eps::degenerate);

// Algebraic (Kasa) least-squares circle through >= 3 points.
FitResult fit_circle(const std::vector<Point2>& points, double eps_rel = eps::degenerate);

// Signed shoelace area (positive for counterclockwise orientation).
double shoelace_area(const std::vector<Point2>& vertices);

}  // namespace bicentric
