#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicentric/theorems.hpp"

namespace bicentric {

struct ReportEntry {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  bool overall_pass = true;
};

struct SceneMetadata {
  int n = 0;
  int winding = 1;
  double start_angle = 0.0;
  std::string generator_version;
};

// One self-contained constructed figure: the circle pair (inside the polygon),
// the traced polygon, its excenters, and the predicted excenter circle.
struct BicentricScene {
  BicentricPolygon polygon;
  ExcenterSet excenters;
  Circle predicted_e;
  std::optional<VerificationReport> reports;
  SceneMetadata metadata;

  const CirclePair& pair() const { return polygon.pair; }
};

inline constexpr double kDefaultTolerance = 1e-9;

// Traces the polygon at start_angle and assembles the full scene. Closure is
// not enforced here; an unclosed orbit shows up in the verification residuals.
BicentricScene make_scene(const CirclePair& pair, int n, int winding, double start_angle);

// Byte-deterministic UTF-8 JSON: fixed key order, 17 significant digits.
// Equal scenes serialize to identical bytes.
std::string scene_to_json(const BicentricScene& scene);

// Parses and validates a scene: schema first (SchemaError), then the geometric
// invariants (InvariantError naming the first violated one). Stored excenters
// are taken as data — their quality is judged by verify_scene, not here.
BicentricScene scene_from_json(const std::string& bytes);

// Recomputes every residual for the scene against the given tolerance and
// returns them as named entries in a fixed order. Residuals are normalized by
// the circumradius; angle-based entries are in radians or unit-vector dots.
VerificationReport verify_scene(const BicentricScene& scene, double tol = kDefaultTolerance);

// Report rendered as byte-deterministic JSON (same float formatting rules).
std::string report_to_json(const VerificationReport& report);

namespace detail {
// Appends a double with the serializer's 17-significant-digit formatting.
void append_json_double(std::string& out, double v);
}  // namespace detail

}  // namespace bicentric
