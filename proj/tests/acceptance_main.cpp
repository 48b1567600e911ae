// Acceptance gate: nine end-to-end checks, one pass/fail line each.
// Exit code is the number of failing checks.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicentric/scene.hpp"
#include "bicentric/sweep.hpp"

namespace fs = std::filesystem;
using namespace bicentric;

namespace {

CirclePair pair_at(double r_k, double d, double r_c, Point2 center_c = {0.0, 0.0}) {
  CirclePair pair;
  pair.c = {center_c, r_c};
  pair.k = {{center_c.x + d, center_c.y}, r_k};
  return pair;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
}

int run_cli(const std::string& args) {
  static const fs::path sink = fs::path("acceptance_work") / "cli_output.txt";
  fs::create_directories(sink.parent_path());
  const std::string cmd =
      std::string(BICENTRIC_CLI_PATH) + " " + args + " > " + sink.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// Windings w with 1 <= w < n/2 and gcd(n, w) = 1; nonempty for all n >= 3
// except n = 4 handled by w = 1 (3 has only w = 1 as well).
std::vector<int> coprime_windings(int n) {
  std::vector<int> out;
  for (int w = 1; 2 * w < n; ++w) {
    if (std::gcd(n, w) == 1) out.push_back(w);
  }
  if (out.empty()) out.push_back(1);
  return out;
}

struct CheckResult {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// --- check 1: the excenters of every traced polygon lie on the circle
// predicted from the pair alone, across sizes, windings, and offsets.
CheckResult check_excenter_circle() {
  constexpr double kTol = 1e-8;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const auto windings = coprime_windings(n);
    const int w = windings[rng() % windings.size()];
    const double r_k = 0.5 + 2.0 * unit(rng);
    const double d_max = 0.8 * r_k * (1.0 - std::cos(kPi * w / n));
    const double d = d_max * unit(rng);
    const Point2 center_c = {2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0};
    const CirclePair pair = solve_closure_rc(n, w, r_k, d, center_c);
    const TraceResult traced = trace_polygon(pair, kTwoPi * unit(rng), n, w);
    const ExcenterSet exc = excenters(traced.polygon);
    const MainTheoremReport rep = verify_main_theorem(traced.polygon, exc);
    worst = std::max({worst, rep.concyclicity_residual, rep.midpoint_residual,
                      rep.radius_residual});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= kTol && secs <= 10.0,
          "200 scenes, worst residual " + fmt(worst) + " vs " + fmt(kTol) + ", " + fmt(secs) +
              " s vs 10 s"};
}

// --- check 2: the solver reproduces the triangle closed form and drives the
// quadrilateral condition residual to zero.
CheckResult check_closed_forms() {
  constexpr double kTol = 1e-11;
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> pick_d(0.0, 0.75);
  const auto t0 = std::chrono::steady_clock::now();
  double worst3 = 0.0;
  double worst4 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double d = pick_d(rng);
    const CirclePair tri = solve_closure_rc(3, 1, 1.0, d);
    worst3 = std::max(worst3, std::abs(tri.c.radius - (1.0 - d * d) / 2.0));
    const CirclePair quad = solve_closure_rc(4, 1, 1.0, d);
    const double p = 1.0 - d;
    const double q = 1.0 + d;
    worst4 = std::max(worst4, std::abs(1.0 / (p * p) + 1.0 / (q * q) -
                                       1.0 / (quad.c.radius * quad.c.radius)));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst3 <= kTol && worst4 <= kTol && secs <= 5.0,
          "50 d values, triangle " + fmt(worst3) + ", quadrilateral " + fmt(worst4) + " vs " +
              fmt(kTol) + ", " + fmt(secs) + " s vs 5 s"};
}

// --- check 3: for triangles the fitted excenter-circle radius is twice the
// circumradius.
CheckResult check_triangle_ratio() {
  constexpr double kTol = 1e-10;
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r_k = 0.5 + 2.5 * unit(rng);
    const double d = 0.7 * r_k * unit(rng);
    const CirclePair pair = solve_closure_rc(3, 1, r_k, d, {unit(rng), unit(rng)});
    const TraceResult traced = trace_polygon(pair, kTwoPi * unit(rng), 3, 1);
    const ExcenterSet exc = excenters(traced.polygon);
    const MainTheoremReport rep = verify_main_theorem(traced.polygon, exc);
    worst = std::max(worst, std::abs(rep.fitted_e.circle.radius / r_k - 2.0));
  }
  return {worst <= kTol, "50 triangles, worst |r_e/r_k - 2| " + fmt(worst) + " vs " + fmt(kTol)};
}

// --- check 4: quadrilateral radius identity r_e^2 = 2 (r_k^2 + d^2) plus the
// right-angle and center-incidence facts about the excenter diagonals.
CheckResult check_quadrilateral() {
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_identity = 0.0;
  double worst_diag = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r_k = 0.5 + 1.5 * unit(rng);
    const double d = 0.8 * r_k * (1.0 - std::cos(kPi / 4)) * unit(rng);
    const CirclePair pair = solve_closure_rc(4, 1, r_k, d);
    const TraceResult traced = trace_polygon(pair, kTwoPi * unit(rng), 4, 1);
    const ExcenterSet exc = excenters(traced.polygon);
    const MainTheoremReport rep = verify_main_theorem(traced.polygon, exc);
    const double r_e = rep.fitted_e.circle.radius;
    worst_identity = std::max(
        worst_identity, std::abs(r_e * r_e - 2.0 * (r_k * r_k + d * d)) / (r_k * r_k));
    const QuadrilateralReport quad = verify_quadrilateral(traced.polygon, exc);
    worst_diag = std::max({worst_diag, quad.incidence_residual, quad.perpendicularity_residual,
                           quad.radius_identity_residual});
  }
  return {worst_identity <= kTol && worst_diag <= kTol,
          "100 pairs, identity " + fmt(worst_identity) + ", diagonals " + fmt(worst_diag) +
              " vs " + fmt(kTol)};
}

// --- check 5: the circumcenter of (inscribed center, chord endpoints) stays
// at distance |r_k^2 - d^2| / (2 r_c) from the circumcircle center for every
// tangent direction, including one hand-derived fixture.
CheckResult check_chord_locus() {
  constexpr double kTol = 1e-10;
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int p = 0; p < 5; ++p) {
    const double r_k = 1.0 + 2.0 * unit(rng);
    const double r_c = (0.15 + 0.45 * unit(rng)) * r_k;
    const double d = 0.9 * (r_k - r_c) * unit(rng);
    const CirclePair pair = pair_at(r_k, d, r_c);
    const double offset = kTwoPi * unit(rng);
    for (int j = 0; j < 64; ++j) {
      const LemmaReport rep = verify_lemma_locus(pair, offset + kTwoPi * j / 64.0);
      worst = std::max(worst, std::abs(rep.locus_residual));
    }
  }
  const CirclePair fixture = pair_at(3.0, 1.0, 1.0);
  const LemmaReport rep = verify_lemma_locus(fixture, 0.37);
  const double fixture_dist = distance(rep.circumcenter, fixture.k.center);
  const double fixture_err = std::abs(fixture_dist - 4.0);
  return {worst <= kTol && fixture_err <= 1e-12,
          "5 pairs x 64 tangents, worst " + fmt(worst) + " vs " + fmt(kTol) + "; fixture |" +
              fmt(fixture_dist) + " - 4| = " + fmt(fixture_err) + " vs 1e-12"};
}

// --- check 6: vertex-polygon area over excenter-polygon area equals the
// radius ratio r_c / r_e on convex scenes.
CheckResult check_area_ratio() {
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double r_k = 0.5 + 1.5 * unit(rng);
    const double d = 0.8 * r_k * (1.0 - std::cos(kPi / n)) * unit(rng);
    const CirclePair pair = solve_closure_rc(n, 1, r_k, d);
    const TraceResult traced = trace_polygon(pair, kTwoPi * unit(rng), n, 1);
    const ExcenterSet exc = excenters(traced.polygon);
    const AreaRatioReport rep = verify_area_ratio(traced.polygon, exc);
    worst = std::max(worst, std::abs(rep.residual));
  }
  return {worst <= kTol, "100 convex scenes, worst residual " + fmt(worst) + " vs " + fmt(kTol)};
}

// --- check 7: sweeping the start angle through 100 frames leaves the closure
// defect unchanged and every excenter on the one predicted circle.
CheckResult check_sweep_invariance() {
  constexpr double kTol = 1e-9;
  SweepOptions opt;
  opt.n = 5;
  opt.winding = 1;
  opt.r_k = 1.3;
  opt.d = 0.25;
  opt.frames = 100;
  opt.tol = kTol;
  const SweepResult sweep = run_sweep(opt);
  const Circle e0 = sweep.frames.front().predicted_e;
  double worst_exc = 0.0;
  for (const BicentricScene& frame : sweep.frames) {
    for (const Point2& p : frame.excenters.excenters) {
      worst_exc = std::max(worst_exc, std::abs(distance(p, e0.center) - e0.radius) / opt.r_k);
    }
  }
  const bool pass = sweep.summary.pass && sweep.summary.max_positional_defect <= kTol &&
                    worst_exc <= kTol;
  return {pass, "100 frames, defect " + fmt(sweep.summary.max_positional_defect) +
                    ", excenter drift " + fmt(worst_exc) + " vs " + fmt(kTol)};
}

// --- check 8: moving any single excenter by 1e-4 * r_k off its circle pushes
// the concyclicity residual past 5e-5 and makes the executable's verify fail.
CheckResult check_tamper_detection() {
  const double r_k = 1.0;
  const CirclePair pair = solve_closure_rc(5, 1, r_k, 0.2);
  const BicentricScene scene = make_scene(pair, 5, 1, 0.3);
  const fs::path dir = "acceptance_work";
  fs::create_directories(dir);
  double min_residual = 1e300;
  bool all_exit_1 = true;
  for (std::size_t i = 0; i < scene.excenters.excenters.size(); ++i) {
    auto doc = nlohmann::json::parse(scene_to_json(scene));
    const Point2 p = scene.excenters.excenters[i];
    const Point2 radial =
        (1.0 / distance(p, scene.predicted_e.center)) * (p - scene.predicted_e.center);
    doc["excenters"][i][0] = p.x + 1e-4 * r_k * radial.x;
    doc["excenters"][i][1] = p.y + 1e-4 * r_k * radial.y;
    const fs::path file = dir / ("tampered_" + std::to_string(i) + ".json");
    spit(file, doc.dump());

    const BicentricScene tampered = scene_from_json(slurp(file));
    const VerificationReport rep = verify_scene(tampered);
    double concyclicity = 0.0;
    for (const ReportEntry& entry : rep.entries) {
      if (entry.name == "concyclicity") concyclicity = entry.value;
    }
    min_residual = std::min(min_residual, concyclicity);
    all_exit_1 = all_exit_1 && run_cli("verify " + file.string()) == 1;
  }
  return {min_residual > 5e-5 && all_exit_1,
          "5 tampered copies, weakest concyclicity " + fmt(min_residual) +
              " vs 5e-05, verify exit codes " + (all_exit_1 ? "all 1" : "not all 1")};
}

// --- check 9: generate and render are byte-deterministic run to run.
CheckResult check_determinism() {
  const fs::path dir = "acceptance_work";
  fs::create_directories(dir);
  const fs::path scene_a = dir / "det_a.json";
  const fs::path scene_b = dir / "det_b.json";
  const std::string gen_args = "generate --n 7 --winding 3 --rk 1.5 --d 0.1 --start-angle 0.9";
  bool ok = run_cli(gen_args + " --out " + scene_a.string()) == 0;
  ok = ok && run_cli(gen_args + " --out " + scene_b.string()) == 0;
  const std::string scene_bytes = slurp(scene_a);
  const bool scenes_equal = ok && !scene_bytes.empty() && scene_bytes == slurp(scene_b);

  const fs::path svg_a = dir / "det_a.svg";
  const fs::path svg_b = dir / "det_b.svg";
  const std::string render_args = " --show-excircles --show-bisectors";
  ok = ok && run_cli("render " + scene_a.string() + " --out " + svg_a.string() + render_args) == 0;
  ok = ok && run_cli("render " + scene_a.string() + " --out " + svg_b.string() + render_args) == 0;
  const std::string svg_bytes = slurp(svg_a);
  const bool svgs_equal = ok && !svg_bytes.empty() && svg_bytes == slurp(svg_b);

  return {scenes_equal && svgs_equal,
          std::string("scene bytes ") + (scenes_equal ? "identical" : "differ") + ", svg bytes " +
              (svgs_equal ? "identical" : "differ")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    CheckResult (*run)();
  };
  const Criterion criteria[] = {
      {"excenter circle on random nested scenes", check_excenter_circle},
      {"triangle and quadrilateral closed forms", check_closed_forms},
      {"triangle excenter-circle radius ratio", check_triangle_ratio},
      {"quadrilateral radius identity and diagonals", check_quadrilateral},
      {"chord-circumcenter locus", check_chord_locus},
      {"area ratio equals radius ratio", check_area_ratio},
      {"start-angle sweep invariance", check_sweep_invariance},
      {"tamper detection", check_tamper_detection},
      {"generate/render byte determinism", check_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    CheckResult result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    if (!result.pass) ++failures;
    std::printf("[%s] %d. %s (%s)\n", result.pass ? "PASS" : "FAIL", index, c.name,
                result.detail.c_str());
  }
  return failures;
}
