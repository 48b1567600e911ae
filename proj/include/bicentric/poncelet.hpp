#pragma once

#include <optional>
#include <vector>

#include "bicentric/geometry.hpp"
#include "bicentric/parallel.hpp"

namespace bicentric {

// Placement of the inscribed circle relative to the circumcircle.
enum class PairConfiguration { Nested, Intersecting, Exterior };

// A circumcircle k together with an inscribed circle c. The center distance d
// is always recomputed from the stored centers so the record cannot go stale.
struct CirclePair {
  Circle k;  // carries the polygon's vertices
  Circle c;  // every polygon side is tangent to this circle

  double d() const { return distance(k.center, c.center); }
};

PairConfiguration classify(const CirclePair& pair);

// Polygon inscribed in pair.k with all sides tangent to pair.c. Side i joins
// vertex i to vertex i+1; indices are cyclic. tangency_points[i] is where side
// i touches the inscribed circle. winding counts how often a closed orbit
// wraps around the center.
struct BicentricPolygon {
  CirclePair pair;
  std::vector<Point2> vertices;
  std::vector<Line> sides;
  std::vector<Point2> tangency_points;
  int winding = 1;
};

// Gap left after chaining n tangent-chord steps: the signed angular surplus
// over the target turn of 2*pi*winding, and the endpoint distance to the
// start vertex relative to the circumcircle radius.
struct ClosureDefect {
  double angular_defect = 0.0;
  double positional_defect = 0.0;
};

struct StepResult {
  Point2 next_vertex;
  Line side;
  Point2 tangency;
};

struct TraceResult {
  BicentricPolygon polygon;
  ClosureDefect defect;
};

// Positional closure tolerance paired with a circle pair's scale.
inline double closure_tolerance(const CirclePair& pair) { return 1e-9 * pair.k.radius; }

// One tangent-chord step: lay a tangent from `vertex` to pair.c and advance to
// the second intersection of that tangent with pair.k. With an incoming
// tangency point the step continues the orbit (the tangent touching elsewhere
// is chosen); without one, `orientation` (+1 counterclockwise, -1 clockwise)
// picks the initial direction of travel around pair.k.
StepResult poncelet_step(const CirclePair& pair, Point2 vertex,
                         std::optional<Point2> incoming_tangency, int orientation);

// Chains n steps starting from the vertex at start_angle on pair.k. The
// polygon is built from the first n vertices whether or not the orbit closes;
// the defect quantifies the gap. Not closing is data, not an error.
TraceResult trace_polygon(const CirclePair& pair, double start_angle, int n, int winding,
                          int orientation = +1);

// Max folded angular defect over `samples` equally spaced start angles. All
// samples must agree (start independence of closure); a spread above 1e-6
// signals numerical breakdown and raises PorismViolation.
double closure_defect(const CirclePair& pair, int n, int winding, int samples,
                      Exec exec = Exec::Parallel);

// Solves for the inscribed-circle radius that closes an n-gon with the given
// winding, by bisection over (0, r_k - d). The circumcircle center is placed
// at center_c + (d, 0). Requires gcd(n, winding) = 1 and a nested solvable
// window; the defect must be monotone in the radius at the evaluated points.
CirclePair solve_closure_rc(int n, int winding, double r_k, double d,
                            Point2 center_c = {0.0, 0.0});

// Closed-form closure conditions with known algebraic form.
enum class ConditionKind { Euler3, Fuss4 };

// Signed residual of the closure condition: zero iff the pair carries a
// closed triangle (Euler3) or quadrilateral (Fuss4).
double condition_residual(const CirclePair& pair, ConditionKind kind);

// Raises InvariantError naming the first violated polygon invariant. Used
// when polygons enter from external data rather than from trace_polygon.
void validate_polygon(const BicentricPolygon& poly);

// True when the vertices wind exactly once around pair.k.center in strictly
// monotone angular order.
bool is_convex(const BicentricPolygon& poly);

}  // namespace bicentric
