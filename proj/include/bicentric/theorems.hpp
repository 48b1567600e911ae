#pragma once

#include <vector>

#include "bicentric/poncelet.hpp"

namespace bicentric {

// Excircle centers of a polygon circumscribing a circle: excenter i is the
// meet of the bisector lines at vertices i and i+1 and carries the circle
// tangent to side i and the two neighboring side lines.
struct ExcenterSet {
  std::vector<Point2> excenters;
  std::vector<double> exradii;
  std::vector<Circle> excircles;
};

// Residuals for the excenter-circle claims: the excenters lie on one circle,
// the circumcircle center halves the segment between the inscribed-circle
// center and that circle's center, and its radius is |r_k^2 - d^2| / r_c.
// All residuals are normalized by the circumradius.
struct MainTheoremReport {
  FitResult fitted_e;
  Circle predicted_e;
  double concyclicity_residual = 0.0;
  double midpoint_residual = 0.0;
  double radius_residual = 0.0;
};

// Construction record for the chord-circumcenter locus: a tangent to the
// inscribed circle cuts the circumcircle in a chord; the circumcenter of
// (inscribed center, chord endpoints) stays at the fixed distance
// |r_k^2 - d^2| / (2 r_c) from the circumcircle center, whatever the tangent.
struct LemmaReport {
  Line tangent;
  Point2 chord_p1;
  Point2 chord_p2;
  Point2 circumcenter;
  double circumradius = 0.0;
  Point2 foot;  // perpendicular foot of the circumcenter line on the tangent
  double locus_residual = 0.0;
  double identity_residual = 0.0;
};

// Residuals for the quadrilateral case: the excenter diagonals meet in the
// inscribed-circle center at a right angle, the excenter circle radius obeys
// r_e^2 = 2 (r_k^2 + d^2), and each vertex sees the segment from its excenter
// to the inscribed center at a right angle.
struct QuadrilateralReport {
  double incidence_residual = 0.0;
  double perpendicularity_residual = 0.0;
  double radius_identity_residual = 0.0;
  double thales_residual = 0.0;
};

// Area of the vertex polygon over the area of the excenter polygon, which
// equals the radius ratio r_c / r_e; plus the fact that each segment from the
// excenter-circle center to an excenter is perpendicular to its side.
struct AreaRatioReport {
  double ratio = 0.0;
  double residual = 0.0;
  double perpendicularity_residual = 0.0;
};

// Line through the vertex perpendicular to the segment from the inscribed
// center to the vertex. Valid because every internal bisector of a polygon
// circumscribing a circle passes through that circle's center.
Line external_bisector(Point2 vertex, Point2 center_c, double eps_rel = eps::degenerate);

// Excenters from pairwise bisector intersections, with their radii checked
// against all three touched side lines before returning.
ExcenterSet excenters(const BicentricPolygon& poly);

// The circle the excenters are claimed to lie on, from the pair alone:
// center 2*m_k - m_c, radius |r_k^2 - d^2| / r_c.
Circle predicted_circle_e(const CirclePair& pair);

// Fits a circle to the excenters as an independent oracle and fills the
// residuals against the prediction. Large residuals are data, not errors.
MainTheoremReport verify_main_theorem(const BicentricPolygon& poly, const ExcenterSet& exc);

// Builds the tangent at the given angle on the inscribed circle and checks the
// chord-circumcenter locus including the identity
// |r_k^2 - d^2| = 2 |circumcenter - m_k| r_c.
LemmaReport verify_lemma_locus(const CirclePair& pair, double tangent_angle);

// Quadrilateral-only checks; requires n = 4 and a convex polygon.
QuadrilateralReport verify_quadrilateral(const BicentricPolygon& poly, const ExcenterSet& exc);

// Area-ratio check; requires a convex polygon.
AreaRatioReport verify_area_ratio(const BicentricPolygon& poly, const ExcenterSet& exc);

}  // namespace bicentric
