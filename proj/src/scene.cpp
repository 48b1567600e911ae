#include "bicentric/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "bicentric/version.hpp"

namespace bicentric {

namespace {

using nlohmann::json;

// ---- emitter -----------------------------------------------------------
// Hand-rolled so the byte layout is fully pinned: fixed key order, no
// whitespace, doubles at 17 significant digits (lossless for binary64).

void append_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    raise(ErrorCode::InvariantError, "finite: cannot serialize a non-finite number");
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void append_string(std::string& out, const std::string& s) {
  out += '"';
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch) & 0xff);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void append_circle(std::string& out, const Circle& c) {
  out += "{\"cx\":";
  append_double(out, c.center.x);
  out += ",\"cy\":";
  append_double(out, c.center.y);
  out += ",\"r\":";
  append_double(out, c.radius);
  out += '}';
}

void append_points(std::string& out, const std::vector<Point2>& pts) {
  out += '[';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    out += '[';
    append_double(out, pts[i].x);
    out += ',';
    append_double(out, pts[i].y);
    out += ']';
  }
  out += ']';
}

void append_report(std::string& out, const VerificationReport& rep) {
  out += "{\"entries\":[";
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const ReportEntry& e = rep.entries[i];
    if (i) out += ',';
    out += "{\"name\":";
    append_string(out, e.name);
    out += ",\"value\":";
    append_double(out, e.value);
    out += ",\"tolerance\":";
    append_double(out, e.tolerance);
    out += e.pass ? ",\"pass\":true}" : ",\"pass\":false}";
  }
  out += "],\"overall_pass\":";
  out += rep.overall_pass ? "true" : "false";
  out += '}';
}

// ---- parser helpers ------------------------------------------------------

[[noreturn]] void schema_fail(const std::string& what) { raise(ErrorCode::SchemaError, what); }

const json& require_key(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_fail(std::string("missing key '") + key + "'");
  return *it;
}

void require_only_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) schema_fail(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

double as_number(const json& j, const char* where) {
  if (!j.is_number()) schema_fail(std::string("expected a number for ") + where);
  const double v = j.get<double>();
  if (!std::isfinite(v)) raise(ErrorCode::InvariantError, std::string("finite: ") + where);
  return v;
}

int as_int(const json& j, const char* where) {
  if (!j.is_number_integer()) schema_fail(std::string("expected an integer for ") + where);
  return j.get<int>();
}

Circle parse_circle(const json& j, const char* where) {
  if (!j.is_object()) schema_fail(std::string("expected an object for ") + where);
  require_only_keys(j, {"cx", "cy", "r"}, where);
  Circle c;
  c.center.x = as_number(require_key(j, "cx"), where);
  c.center.y = as_number(require_key(j, "cy"), where);
  c.radius = as_number(require_key(j, "r"), where);
  if (!(c.radius > 0.0)) {
    raise(ErrorCode::InvariantError, std::string("radius: must be positive for ") + where);
  }
  return c;
}

std::vector<Point2> parse_points(const json& j, const char* where) {
  if (!j.is_array()) schema_fail(std::string("expected an array for ") + where);
  std::vector<Point2> out;
  out.reserve(j.size());
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) {
      schema_fail(std::string("expected [x,y] entries in ") + where);
    }
    out.push_back({as_number(e[0], where), as_number(e[1], where)});
  }
  return out;
}

VerificationReport parse_report(const json& j) {
  if (!j.is_object()) schema_fail("expected an object for reports");
  require_only_keys(j, {"entries", "overall_pass"}, "reports");
  const json& entries = require_key(j, "entries");
  if (!entries.is_array()) schema_fail("expected an array for reports.entries");
  const json& overall = require_key(j, "overall_pass");
  if (!overall.is_boolean()) schema_fail("expected a boolean for reports.overall_pass");

  VerificationReport rep;
  rep.overall_pass = overall.get<bool>();
  for (const json& e : entries) {
    if (!e.is_object()) schema_fail("expected objects in reports.entries");
    require_only_keys(e, {"name", "value", "tolerance", "pass"}, "reports.entries");
    const json& name = require_key(e, "name");
    if (!name.is_string()) schema_fail("expected a string for reports.entries.name");
    const json& pass = require_key(e, "pass");
    if (!pass.is_boolean()) schema_fail("expected a boolean for reports.entries.pass");
    rep.entries.push_back({name.get<std::string>(), as_number(require_key(e, "value"), "value"),
                           as_number(require_key(e, "tolerance"), "tolerance"), pass.get<bool>()});
  }
  return rep;
}

}  // namespace

namespace detail {
void append_json_double(std::string& out, double v) { append_double(out, v); }
}  // namespace detail

BicentricScene make_scene(const CirclePair& pair, int n, int winding, double start_angle) {
  const TraceResult traced = trace_polygon(pair, start_angle, n, winding);

  BicentricScene scene;
  scene.polygon = traced.polygon;
  scene.excenters = excenters(traced.polygon);
  scene.predicted_e = predicted_circle_e(pair);
  scene.metadata.n = n;
  scene.metadata.winding = winding;
  scene.metadata.start_angle = start_angle;
  scene.metadata.generator_version = kVersion;
  return scene;
}

std::string scene_to_json(const BicentricScene& scene) {
  std::string out;
  out.reserve(4096);
  out += "{\"schema_version\":1,\"circles\":{\"k\":";
  append_circle(out, scene.pair().k);
  out += ",\"c\":";
  append_circle(out, scene.pair().c);
  out += ",\"e\":";
  append_circle(out, scene.predicted_e);
  out += "},\"vertices\":";
  append_points(out, scene.polygon.vertices);
  out += ",\"sides\":[";
  for (std::size_t i = 0; i < scene.polygon.sides.size(); ++i) {
    const Line& l = scene.polygon.sides[i];
    if (i) out += ',';
    out += '[';
    append_double(out, l.normal_x);
    out += ',';
    append_double(out, l.normal_y);
    out += ',';
    append_double(out, l.offset);
    out += ']';
  }
  out += "],\"tangency_points\":";
  append_points(out, scene.polygon.tangency_points);
  out += ",\"excenters\":";
  append_points(out, scene.excenters.excenters);
  out += ",\"exradii\":[";
  for (std::size_t i = 0; i < scene.excenters.exradii.size(); ++i) {
    if (i) out += ',';
    append_double(out, scene.excenters.exradii[i]);
  }
  out += "],\"winding\":";
  out += std::to_string(scene.polygon.winding);
  out += ",\"start_angle\":";
  append_double(out, scene.metadata.start_angle);
  if (scene.reports) {
    out += ",\"reports\":";
    append_report(out, *scene.reports);
  }
  out += '}';
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  std::string out;
  append_report(out, report);
  return out;
}

BicentricScene scene_from_json(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    schema_fail(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_fail("top level must be an object");
  require_only_keys(j,
                    {"schema_version", "circles", "vertices", "sides", "tangency_points",
                     "excenters", "exradii", "winding", "start_angle", "reports"},
                    "scene");
  if (as_int(require_key(j, "schema_version"), "schema_version") != kSchemaVersion) {
    schema_fail("unsupported schema_version");
  }

  const json& circles = require_key(j, "circles");
  if (!circles.is_object()) schema_fail("expected an object for circles");
  require_only_keys(circles, {"k", "c", "e"}, "circles");

  BicentricScene scene;
  scene.polygon.pair.k = parse_circle(require_key(circles, "k"), "circles.k");
  scene.polygon.pair.c = parse_circle(require_key(circles, "c"), "circles.c");
  scene.predicted_e = parse_circle(require_key(circles, "e"), "circles.e");

  scene.polygon.vertices = parse_points(require_key(j, "vertices"), "vertices");
  scene.polygon.tangency_points = parse_points(require_key(j, "tangency_points"), "tangency_points");
  scene.excenters.excenters = parse_points(require_key(j, "excenters"), "excenters");

  const json& sides = require_key(j, "sides");
  if (!sides.is_array()) schema_fail("expected an array for sides");
  for (const json& e : sides) {
    if (!e.is_array() || e.size() != 3) schema_fail("expected [nx,ny,off] entries in sides");
    scene.polygon.sides.push_back(
        {as_number(e[0], "sides"), as_number(e[1], "sides"), as_number(e[2], "sides")});
  }

  const json& exradii = require_key(j, "exradii");
  if (!exradii.is_array()) schema_fail("expected an array for exradii");
  for (const json& e : exradii) {
    const double r = as_number(e, "exradii");
    if (!(r > 0.0)) raise(ErrorCode::InvariantError, "exradius: must be positive");
    scene.excenters.exradii.push_back(r);
  }

  scene.polygon.winding = as_int(require_key(j, "winding"), "winding");
  scene.metadata.start_angle = as_number(require_key(j, "start_angle"), "start_angle");

  const std::size_t n = scene.polygon.vertices.size();
  if (scene.polygon.sides.size() != n || scene.polygon.tangency_points.size() != n ||
      scene.excenters.excenters.size() != n || scene.excenters.exradii.size() != n || n < 3) {
    raise(ErrorCode::InvariantError, "arity: vertices, sides, tangency points, excenters, and exradii must agree");
  }
  for (const Point2& m : scene.excenters.excenters) {
    if (!finite(m)) raise(ErrorCode::InvariantError, "finite: excenter coordinates must be finite");
  }
  validate_polygon(scene.polygon);

  scene.excenters.excircles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    scene.excenters.excircles.push_back({scene.excenters.excenters[i], scene.excenters.exradii[i]});
  }

  scene.metadata.n = static_cast<int>(n);
  scene.metadata.winding = scene.polygon.winding;
  scene.metadata.generator_version = kVersion;
  if (j.contains("reports")) scene.reports = parse_report(j["reports"]);
  return scene;
}

VerificationReport verify_scene(const BicentricScene& scene, double tol) {
  const BicentricPolygon& poly = scene.polygon;
  const ExcenterSet& exc = scene.excenters;
  const std::size_t n = poly.vertices.size();
  const double r_k = poly.pair.k.radius;
  const double r_c = poly.pair.c.radius;
  const Point2 m_k = poly.pair.k.center;
  const Point2 m_c = poly.pair.c.center;

  VerificationReport rep;
  auto add = [&](const char* name, double value) {
    const bool ok = std::isfinite(value) && value <= tol;
    rep.entries.push_back({name, value, tol, ok});
    if (!ok) rep.overall_pass = false;
  };

  double v_on_k = 0.0, s_tan = 0.0, t_on = 0.0, v_on_s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 v = poly.vertices[i];
    const Point2 w = poly.vertices[(i + 1) % n];
    const Point2 t = poly.tangency_points[i];
    const Line& side = poly.sides[i];
    v_on_k = std::max(v_on_k, std::abs(distance(v, m_k) - r_k));
    s_tan = std::max(s_tan, std::abs(distance_point_line(m_c, side) - r_c));
    t_on = std::max({t_on, std::abs(distance(t, m_c) - r_c), distance_point_line(t, side)});
    v_on_s = std::max({v_on_s, distance_point_line(v, side), distance_point_line(w, side)});
  }
  add("vertex_on_k", v_on_k / r_k);
  add("side_tangent_c", s_tan / r_k);
  add("tangency_on_c", t_on / r_k);
  add("vertex_on_sides", v_on_s / r_k);

  // The vertex cycle must wrap the declared number of times, in one of the
  // two traversal directions.
  double t_ccw = 0.0, t_cw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a0 = angle_of(poly.vertices[i] - m_k);
    const double a1 = angle_of(poly.vertices[(i + 1) % n] - m_k);
    t_ccw += fold_positive(a1 - a0);
    t_cw += fold_positive(a0 - a1);
  }
  const double target = kTwoPi * poly.winding;
  add("winding_sum", std::min(std::abs(t_ccw - target), std::abs(t_cw - target)));

  double ex_tan = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::size_t jj : {(i + n - 1) % n, i, (i + 1) % n}) {
      ex_tan = std::max(
          ex_tan, std::abs(distance_point_line(exc.excenters[i], poly.sides[jj]) - exc.exradii[i]));
    }
  }
  add("excircle_tangency", ex_tan / r_k);

  // Stored excenters against a fresh bisector construction. Skipped when the
  // construction itself degenerates; the other entries still judge the data.
  try {
    const ExcenterSet derived = excenters(poly);
    double ex_con = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ex_con = std::max(ex_con, distance(exc.excenters[i], derived.excenters[i]));
    }
    add("excenter_construction", ex_con / r_k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParallelBisectors && e.code() != ErrorCode::TangencyViolation) throw;
  }

  const MainTheoremReport main = verify_main_theorem(poly, exc);
  add("concyclicity", main.concyclicity_residual);
  add("midpoint", main.midpoint_residual);
  add("radius_formula", main.radius_residual);
  add("predicted_e_center", distance(scene.predicted_e.center, main.predicted_e.center) / r_k);
  add("predicted_e_radius", std::abs(scene.predicted_e.radius - main.predicted_e.radius) / r_k);

  double locus = 0.0;
  int chords = 0;
  for (int i = 0; i < 16; ++i) {
    try {
      locus = std::max(locus,
                       verify_lemma_locus(poly.pair, kTwoPi * i / 16.0).locus_residual);
      ++chords;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoChord && e.code() != ErrorCode::CollinearPoints) throw;
    }
  }
  if (chords > 0) add("lemma_locus", locus);

  const bool convex = is_convex(poly);
  if (n == 4 && convex) {
    const QuadrilateralReport q = verify_quadrilateral(poly, exc);
    add("diagonal_incidence", q.incidence_residual);
    add("diagonal_perpendicularity", q.perpendicularity_residual);
    add("quad_radius_identity", q.radius_identity_residual);
    add("thales", q.thales_residual);
  }
  if (convex) {
    const AreaRatioReport a = verify_area_ratio(poly, exc);
    add("area_ratio", a.residual);
    add("excenter_perpendicularity", a.perpendicularity_residual);
  }
  if (n == 3) {
    add("triangle_circumradius_ratio", std::abs(main.fitted_e.circle.radius / r_k - 2.0));
  }
  return rep;
}

}  // namespace bicentric
