#include "bicentric/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace bicentric {

Line external_bisector(Point2 vertex, Point2 center_c, double eps_rel) {
  const double scale = std::max({1.0, norm(vertex), norm(center_c)});
  if (distance(vertex, center_c) <= eps_rel * scale) {
    raise(ErrorCode::DegenerateInput, "external_bisector: vertex coincides with the center");
  }
  return make_line(vertex - center_c, vertex);
}

ExcenterSet excenters(const BicentricPolygon& poly) {
  const std::size_t n = poly.vertices.size();
  const Point2 m_c = poly.pair.c.center;
  const double r_k = poly.pair.k.radius;

  std::vector<Line> bisectors;
  bisectors.reserve(n);
  for (const Point2& v : poly.vertices) {
    bisectors.push_back(external_bisector(v, m_c));
  }

  ExcenterSet out;
  out.excenters.reserve(n);
  out.exradii.reserve(n);
  out.excircles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 m = line_line_intersection(bisectors[i], bisectors[(i + 1) % n], eps::parallel,
                                            ErrorCode::ParallelBisectors);
    const double r = distance_point_line(m, poly.sides[i]);
    // The excircle must touch the side lines on both flanks at the same
    // distance; anything else means the input polygon is inconsistent.
    const double r_prev = distance_point_line(m, poly.sides[(i + n - 1) % n]);
    const double r_next = distance_point_line(m, poly.sides[(i + 1) % n]);
    if (std::abs(r_prev - r) > 1e-9 * r_k || std::abs(r_next - r) > 1e-9 * r_k) {
      raise(ErrorCode::TangencyViolation,
            "excenters: excircle distances to the three side lines disagree");
    }
    if (!(r > eps::degenerate * r_k)) {
      raise(ErrorCode::DegenerateInput, "excenters: excircle radius vanishes");
    }
    out.excenters.push_back(m);
    out.exradii.push_back(r);
    out.excircles.push_back({m, r});
  }
  return out;
}

Circle predicted_circle_e(const CirclePair& pair) {
  const double r_k = pair.k.radius;
  const double d = pair.d();
  const double num = std::abs(r_k * r_k - d * d);
  if (num <= eps::degenerate * r_k * r_k) {
    raise(ErrorCode::DegenerateE, "predicted_circle_e: d equals the circumradius");
  }
  const Point2 center = {2.0 * pair.k.center.x - pair.c.center.x,
                         2.0 * pair.k.center.y - pair.c.center.y};
  return {center, num / pair.c.radius};
}

MainTheoremReport verify_main_theorem(const BicentricPolygon& poly, const ExcenterSet& exc) {
  const double r_k = poly.pair.k.radius;
  const double r_c = poly.pair.c.radius;
  const double d = poly.pair.d();

  MainTheoremReport out;
  out.fitted_e = fit_circle(exc.excenters);
  out.predicted_e = predicted_circle_e(poly.pair);

  double worst = 0.0;
  for (const Point2& m : exc.excenters) {
    worst = std::max(worst,
                     std::abs(distance(m, out.predicted_e.center) - out.predicted_e.radius));
  }
  out.concyclicity_residual = worst / r_k;

  const Point2 mid = {0.5 * (poly.pair.c.center.x + out.fitted_e.circle.center.x),
                      0.5 * (poly.pair.c.center.y + out.fitted_e.circle.center.y)};
  out.midpoint_residual = distance(poly.pair.k.center, mid) / r_k;
  out.radius_residual = std::abs(out.fitted_e.circle.radius - std::abs(r_k * r_k - d * d) / r_c) / r_k;
  return out;
}

LemmaReport verify_lemma_locus(const CirclePair& pair, double tangent_angle) {
  const double r_k = pair.k.radius;
  const double r_c = pair.c.radius;
  const double d = pair.d();
  const Point2 radial = {std::cos(tangent_angle), std::sin(tangent_angle)};
  const Point2 touch = pair.c.center + r_c * radial;

  LemmaReport out;
  out.tangent = make_line(radial, touch);
  const std::vector<Point2> chord = line_circle_intersection(out.tangent, pair.k);
  if (chord.size() != 2) {
    raise(ErrorCode::NoChord, "verify_lemma_locus: tangent does not cut the circumcircle");
  }
  out.chord_p1 = chord[0];
  out.chord_p2 = chord[1];

  const Circle dd = circumcircle(pair.c.center, chord[0], chord[1]);
  out.circumcenter = dd.center;
  out.circumradius = dd.radius;

  // The circumcenter and the circumcircle center both sit on the chord's
  // perpendicular bisector, so the center line is never parallel to the
  // tangent; its intersection is the perpendicular foot.
  const Line center_line = line_through(out.circumcenter, pair.k.center);
  out.foot = line_line_intersection(center_line, out.tangent);

  const double dist = distance(out.circumcenter, pair.k.center);
  const double num = std::abs(r_k * r_k - d * d);
  out.locus_residual = std::abs(dist - num / (2.0 * r_c)) / r_k;
  out.identity_residual = std::abs(num - 2.0 * dist * r_c) / (r_k * r_k);
  return out;
}

QuadrilateralReport verify_quadrilateral(const BicentricPolygon& poly, const ExcenterSet& exc) {
  if (poly.vertices.size() != 4 || exc.excenters.size() != 4) {
    raise(ErrorCode::WrongArity, "verify_quadrilateral: needs exactly 4 vertices");
  }
  if (!is_convex(poly)) {
    raise(ErrorCode::NotConvex, "verify_quadrilateral: polygon is not convex");
  }
  const double r_k = poly.pair.k.radius;
  const double d = poly.pair.d();
  const Point2 m_c = poly.pair.c.center;

  const Line diag_a = line_through(exc.excenters[0], exc.excenters[2]);
  const Line diag_b = line_through(exc.excenters[1], exc.excenters[3]);

  QuadrilateralReport out;
  out.incidence_residual =
      std::max(distance_point_line(m_c, diag_a), distance_point_line(m_c, diag_b)) / r_k;
  out.perpendicularity_residual = std::abs(dot(line_direction(diag_a), line_direction(diag_b)));

  const FitResult fit = fit_circle(exc.excenters);
  const double r_e = fit.circle.radius;
  out.radius_identity_residual =
      std::abs(r_e * r_e - 2.0 * (r_k * r_k + d * d)) / (r_k * r_k);

  // Each vertex lies on the circle with diameter from its excenter to the
  // inscribed center, i.e. it sees that segment at a right angle.
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2 m = exc.excenters[i];
    const Point2 a = poly.vertices[i];
    const Point2 b = poly.vertices[(i + 1) % 4];
    worst = std::max(worst, std::abs(dot(a - m_c, a - m)));
    worst = std::max(worst, std::abs(dot(b - m_c, b - m)));
  }
  out.thales_residual = worst / (r_k * r_k);
  return out;
}

AreaRatioReport verify_area_ratio(const BicentricPolygon& poly, const ExcenterSet& exc) {
  if (!is_convex(poly)) {
    raise(ErrorCode::NotConvex, "verify_area_ratio: polygon is not convex");
  }
  const double r_k = poly.pair.k.radius;
  const double r_c = poly.pair.c.radius;

  AreaRatioReport out;
  out.ratio = shoelace_area(poly.vertices) / shoelace_area(exc.excenters);

  const FitResult fit = fit_circle(exc.excenters);
  out.residual = std::abs(out.ratio - r_c / fit.circle.radius);

  double worst = 0.0;
  for (std::size_t i = 0; i < exc.excenters.size(); ++i) {
    const Point2 spoke = fit.circle.center - exc.excenters[i];
    worst = std::max(worst, std::abs(dot(spoke, line_direction(poly.sides[i]))));
  }
  out.perpendicularity_residual = worst / r_k;
  return out;
}

}  // namespace bicentric
