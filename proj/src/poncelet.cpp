#include "bicentric/poncelet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace bicentric {

PairConfiguration classify(const CirclePair& pair) {
  const double d = pair.d();
  if (d + pair.c.radius < pair.k.radius) return PairConfiguration::Nested;
  if (d > pair.k.radius + pair.c.radius) return PairConfiguration::Exterior;
  return PairConfiguration::Intersecting;
}

StepResult poncelet_step(const CirclePair& pair, Point2 vertex,
                         std::optional<Point2> incoming_tangency, int orientation) {
  const Circle& c = pair.c;
  const Circle& k = pair.k;
  const double dist_c = distance(vertex, c.center);
  if (std::abs(dist_c - c.radius) <= eps::tangency * c.radius) {
    raise(ErrorCode::VertexOnC, "poncelet_step: vertex lies on the inscribed circle, tangents coincide");
  }
  if (dist_c < c.radius) {
    raise(ErrorCode::VertexInsideC, "poncelet_step: vertex lies inside the inscribed circle");
  }
  const TangentLines tng = tangent_lines_from_point(c, vertex);

  // Second intersection of a tangent with the circumcircle (the one != vertex).
  auto advance = [&](const Line& side) -> Point2 {
    const std::vector<Point2> pts = line_circle_intersection(side, k);
    if (pts.size() < 2) {
      raise(ErrorCode::DegenerateInput, "poncelet_step: tangent chord is tangent to the circumcircle");
    }
    return distance(pts[0], vertex) >= distance(pts[1], vertex) ? pts[0] : pts[1];
  };

  bool pick_first;
  if (incoming_tangency) {
    const double th = eps::tangency * c.radius;
    const double d1 = distance(tng.first_tangency, *incoming_tangency);
    const double d2 = distance(tng.second_tangency, *incoming_tangency);
    if (d1 <= th && d2 <= th) {
      raise(ErrorCode::AmbiguousTangent,
            "poncelet_step: both tangency points coincide with the incoming one");
    }
    pick_first = d1 >= d2;
  } else {
    // First step: no tangency to exclude, so pick the tangent that advances in
    // the requested direction around the circumcircle center.
    const double s = orientation >= 0 ? 1.0 : -1.0;
    const double a1 = s * cross(vertex - k.center, advance(tng.first) - k.center);
    const double a2 = s * cross(vertex - k.center, advance(tng.second) - k.center);
    if (a1 == a2) {
      raise(ErrorCode::AmbiguousTangent, "poncelet_step: orientation does not separate the tangents");
    }
    pick_first = a1 > a2;
  }

  StepResult out;
  out.side = pick_first ? tng.first : tng.second;
  out.tangency = pick_first ? tng.first_tangency : tng.second_tangency;
  out.next_vertex = advance(out.side);
  return out;
}

TraceResult trace_polygon(const CirclePair& pair, double start_angle, int n, int winding,
                          int orientation) {
  if (n < 3) raise(ErrorCode::InvalidArgument, "trace_polygon: need at least 3 vertices");
  if (winding < 1) raise(ErrorCode::InvalidArgument, "trace_polygon: winding must be >= 1");
  if (orientation != 1 && orientation != -1) {
    raise(ErrorCode::InvalidArgument, "trace_polygon: orientation must be +1 or -1");
  }

  const double s = orientation;
  const Point2 start = circle_point(pair.k, start_angle);

  TraceResult out;
  out.polygon.pair = pair;
  out.polygon.winding = winding;
  out.polygon.vertices.reserve(static_cast<std::size_t>(n));
  out.polygon.sides.reserve(static_cast<std::size_t>(n));
  out.polygon.tangency_points.reserve(static_cast<std::size_t>(n));

  Point2 current = start;
  std::optional<Point2> incoming;
  double prev_angle = angle_of(current - pair.k.center);
  double total_turn = 0.0;
  for (int i = 0; i < n; ++i) {
    out.polygon.vertices.push_back(current);
    const StepResult step = poncelet_step(pair, current, incoming, orientation);
    out.polygon.sides.push_back(step.side);
    out.polygon.tangency_points.push_back(step.tangency);
    const double next_angle = angle_of(step.next_vertex - pair.k.center);
    total_turn += fold_positive(s * (next_angle - prev_angle));
    prev_angle = next_angle;
    current = step.next_vertex;
    incoming = step.tangency;
  }
  out.defect.angular_defect = total_turn - kTwoPi * winding;
  out.defect.positional_defect = distance(current, start) / pair.k.radius;
  return out;
}

double closure_defect(const CirclePair& pair, int n, int winding, int samples, Exec exec) {
  if (samples < 1) raise(ErrorCode::InvalidArgument, "closure_defect: samples must be >= 1");

  const std::vector<double> folded = map_indexed<double>(
      static_cast<std::size_t>(samples),
      [&](std::size_t i) {
        const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
        return fold_angle(trace_polygon(pair, a, n, winding).defect.angular_defect);
      },
      exec);

  double worst = 0.0;
  double spread = 0.0;
  for (const double g : folded) {
    worst = std::max(worst, std::abs(g));
    spread = std::max(spread, std::abs(fold_angle(g - folded[0])));
  }
  if (spread > 1e-6) {
    raise(ErrorCode::PorismViolation,
          "closure_defect: defect is not independent of the start vertex");
  }
  return worst;
}

CirclePair solve_closure_rc(int n, int winding, double r_k, double d, Point2 center_c) {
  if (n < 3) raise(ErrorCode::InvalidArgument, "solve_closure_rc: need at least 3 vertices");
  if (winding < 1) raise(ErrorCode::InvalidArgument, "solve_closure_rc: winding must be >= 1");
  if (std::gcd(n, winding) != 1) {
    raise(ErrorCode::InvalidArgument, "solve_closure_rc: n and winding must be coprime");
  }
  if (!(r_k > 0.0) || !std::isfinite(r_k)) {
    raise(ErrorCode::InvalidArgument, "solve_closure_rc: circumradius must be positive and finite");
  }
  if (!(d >= 0.0) || !std::isfinite(d)) {
    raise(ErrorCode::InvalidArgument, "solve_closure_rc: center distance must be nonnegative");
  }
  if (d >= r_k) {
    raise(ErrorCode::NoSolution, "solve_closure_rc: no nested radius window for d >= r_k");
  }

  const Point2 m_k = center_c + Point2{d, 0.0};
  const double span = r_k - d;

  // Angular defect of the n-step orbit from a fixed start. Evaluation failures
  // near the top of the bracket (vertex pinched onto the inscribed circle)
  // count as the large-radius side; they carry no turn information.
  auto eval = [&](double r_c) -> double {
    const CirclePair p{{m_k, r_k}, {center_c, r_c}};
    try {
      return trace_polygon(p, 0.0, n, winding).defect.angular_defect;
    } catch (const Error&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  double lo = 1e-12 * span;
  double hi = (1.0 - 1e-9) * span;
  double f_lo = eval(lo);
  double f_hi = eval(hi);
  std::vector<std::pair<double, double>> evals;
  evals.reserve(208);
  evals.emplace_back(lo, f_lo);
  evals.emplace_back(hi, f_hi);
  if (!(f_lo > 0.0) || !(f_hi < 0.0)) {
    raise(ErrorCode::NoSolution, "solve_closure_rc: defect does not change sign across the bracket");
  }

  // Bisect to the representable floor: the loop ends when the midpoint
  // collides with an endpoint, which keeps the residual defect at the level of
  // the defect slope times one ulp of the radius.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = eval(mid);
    evals.emplace_back(mid, f_mid);
    if (f_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // The defect must shrink as the inscribed circle grows; check every finite
  // evaluation rather than assuming it.
  std::sort(evals.begin(), evals.end());
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& [rc, f] : evals) {
    if (!std::isfinite(f)) continue;
    if (f > prev + 1e-10) {
      raise(ErrorCode::NonMonotonic, "solve_closure_rc: defect is not monotone in the radius");
    }
    prev = f;
  }

  const CirclePair out{{m_k, r_k}, {center_c, 0.5 * (lo + hi)}};
  if (closure_defect(out, n, winding, 3, Exec::Serial) > 1e-12) {
    raise(ErrorCode::NoSolution, "solve_closure_rc: bisection converged but the orbit does not close");
  }
  return out;
}

double condition_residual(const CirclePair& pair, ConditionKind kind) {
  const double r_k = pair.k.radius;
  const double r_c = pair.c.radius;
  const double d = pair.d();
  if (std::abs(r_k - d) <= eps::degenerate * r_k) {
    raise(ErrorCode::PoleAtDEqualsRK, "condition_residual: center distance equals the circumradius");
  }
  const double p = r_k - d;
  const double q = r_k + d;
  if (kind == ConditionKind::Euler3) {
    return 1.0 / p + 1.0 / q - 1.0 / r_c;
  }
  return 1.0 / (p * p) + 1.0 / (q * q) - 1.0 / (r_c * r_c);
}

void validate_polygon(const BicentricPolygon& poly) {
  const std::size_t n = poly.vertices.size();
  if (n < 3) raise(ErrorCode::InvariantError, "arity: polygon needs at least 3 vertices");
  if (poly.sides.size() != n || poly.tangency_points.size() != n) {
    raise(ErrorCode::InvariantError, "arity: vertices, sides, and tangency points disagree in count");
  }
  if (poly.winding < 1) raise(ErrorCode::InvariantError, "winding: must be >= 1");

  const double r_k = poly.pair.k.radius;
  const double r_c = poly.pair.c.radius;
  const Point2 m_k = poly.pair.k.center;
  const Point2 m_c = poly.pair.c.center;
  if (!(r_k > 0.0) || !std::isfinite(r_k) || !(r_c > 0.0) || !std::isfinite(r_c)) {
    raise(ErrorCode::InvariantError, "radius: circle radii must be positive and finite");
  }
  if (!finite(m_k) || !finite(m_c)) {
    raise(ErrorCode::InvariantError, "finite: circle centers must be finite");
  }

  const double tol = 1e-10 * r_k;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 v = poly.vertices[i];
    const Point2 t = poly.tangency_points[i];
    const Line& side = poly.sides[i];
    if (!finite(v) || !finite(t) || !std::isfinite(side.offset)) {
      raise(ErrorCode::InvariantError, "finite: polygon coordinates must be finite");
    }
    const double unit = std::hypot(side.normal_x, side.normal_y);
    if (std::abs(unit - 1.0) > 1e-14) {
      raise(ErrorCode::InvariantError, "line_normal: side normals must have unit length");
    }
    if (!(side.normal_x > 0.0 || (side.normal_x == 0.0 && side.normal_y > 0.0))) {
      raise(ErrorCode::InvariantError, "line_canonical: side normal sign is not canonical");
    }
    if (std::abs(distance(v, m_k) - r_k) > tol) {
      raise(ErrorCode::InvariantError, "vertex_on_k: vertex is off the circumcircle");
    }
    if (std::abs(distance_point_line(m_c, side) - r_c) > tol) {
      raise(ErrorCode::InvariantError, "side_tangent_c: side is not tangent to the inscribed circle");
    }
    if (std::abs(distance(t, m_c) - r_c) > tol) {
      raise(ErrorCode::InvariantError, "tangency_on_c: tangency point is off the inscribed circle");
    }
    if (distance_point_line(t, side) > tol) {
      raise(ErrorCode::InvariantError, "tangency_on_side: tangency point is off its side");
    }
    if (distance(v, poly.vertices[(i + 1) % n]) <= eps::degenerate * r_k) {
      raise(ErrorCode::InvariantError, "adjacent_vertices: adjacent vertices coincide");
    }
    if (distance(poly.tangency_points[i], poly.tangency_points[(i + 1) % n]) <=
        eps::tangency * r_c) {
      raise(ErrorCode::InvariantError, "adjacent_sides: adjacent sides coincide");
    }
  }
}

bool is_convex(const BicentricPolygon& poly) {
  const std::size_t n = poly.vertices.size();
  if (n < 3 || poly.winding != 1) return false;
  const double s = shoelace_area(poly.vertices) >= 0.0 ? 1.0 : -1.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a0 = angle_of(poly.vertices[i] - poly.pair.k.center);
    const double a1 = angle_of(poly.vertices[(i + 1) % n] - poly.pair.k.center);
    const double adv = fold_positive(s * (a1 - a0));
    if (adv <= 1e-9 || adv >= kTwoPi - 1e-9) return false;
    total += adv;
  }
  return std::abs(total - kTwoPi) < 1e-6;
}

}  // namespace bicentric
