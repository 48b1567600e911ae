#include "bicentric/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bicentric/scene.hpp"
#include "bicentric/svg.hpp"
#include "bicentric/sweep.hpp"
#include "bicentric/version.hpp"

namespace bicentric {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SchemaError:
    case ErrorCode::IoError:
    case ErrorCode::InvalidArgument:
      return 2;
    case ErrorCode::InvariantError:
      return 1;
    default:
      return 3;  // numeric or geometric failure
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) raise(ErrorCode::IoError, "failed while reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << bytes;
  out.flush();
  if (!out) raise(ErrorCode::IoError, "failed while writing '" + path + "'");
}

std::string num17(double v) {
  std::string s;
  detail::append_json_double(s, v);
  return s;
}

void print_report_table(const VerificationReport& rep, std::ostream& os) {
  char buf[128];
  os << "residual                          value         tolerance     status\n";
  for (const ReportEntry& e : rep.entries) {
    std::snprintf(buf, sizeof buf, "%-32s  %12.5e  %12.5e  %s\n", e.name.c_str(), e.value,
                  e.tolerance, e.pass ? "pass" : "FAIL");
    os << buf;
  }
  os << "overall: " << (rep.overall_pass ? "pass" : "FAIL") << "\n";
}

int run_solve(int n, int winding, double r_k, double d, bool as_json) {
  const CirclePair pair = solve_closure_rc(n, winding, r_k, d);
  const double defect = closure_defect(pair, n, winding, 8);

  std::string euler3, fuss4;
  if (n == 3) euler3 = num17(condition_residual(pair, ConditionKind::Euler3));
  if (n == 4) fuss4 = num17(condition_residual(pair, ConditionKind::Fuss4));

  if (as_json) {
    std::string out = "{\"r_c\":" + num17(pair.c.radius) + ",\"closure_defect\":" + num17(defect);
    if (!euler3.empty()) out += ",\"euler3_residual\":" + euler3;
    if (!fuss4.empty()) out += ",\"fuss4_residual\":" + fuss4;
    out += "}";
    std::cout << out << "\n";
  } else {
    std::cout << "r_c = " << num17(pair.c.radius) << "\n";
    std::cout << "closure_defect = " << num17(defect) << "\n";
    if (!euler3.empty()) std::cout << "euler3_residual = " << euler3 << "\n";
    if (!fuss4.empty()) std::cout << "fuss4_residual = " << fuss4 << "\n";
  }
  return 0;
}

int run_generate(int n, int winding, double r_k, double d, double start_angle,
                 const std::string& out_path, double tol) {
  const CirclePair pair = solve_closure_rc(n, winding, r_k, d);
  BicentricScene scene = make_scene(pair, n, winding, start_angle);
  scene.reports = verify_scene(scene, tol);
  write_file(out_path, scene_to_json(scene));
  if (!scene.reports->overall_pass) {
    std::cerr << "generated scene fails verification:\n";
    print_report_table(*scene.reports, std::cerr);
    return 1;
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_verify(const std::string& path, double tol, bool as_json) {
  const BicentricScene scene = scene_from_json(read_file(path));
  const VerificationReport rep = verify_scene(scene, tol);
  if (as_json) {
    std::cout << report_to_json(rep) << "\n";
  } else {
    print_report_table(rep, std::cout);
  }
  return rep.overall_pass ? 0 : 1;
}

int run_render(const std::string& path, const std::string& out_path, const RenderOptions& opt) {
  const BicentricScene scene = scene_from_json(read_file(path));
  write_file(out_path, render_svg(scene, opt));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_sweep_cmd(const SweepOptions& options, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) raise(ErrorCode::IoError, "cannot create directory '" + out_dir + "'");

  const SweepResult result = run_sweep(options);
  char name[32];
  for (std::size_t i = 0; i < result.frames.size(); ++i) {
    std::snprintf(name, sizeof name, "frame_%04zu.json", i);
    write_file(out_dir + "/" + name, scene_to_json(result.frames[i]));
  }
  write_file(out_dir + "/summary.json", summary_to_json(options, result.summary));
  std::cout << "wrote " << result.frames.size() << " frames and summary.json to " << out_dir
            << "\n";
  if (!result.summary.pass) {
    raise(ErrorCode::PorismViolation,
          "sweep: closure or excenter-circle invariance failed; see summary.json");
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"bicentric polygon construction, closure solving, and verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int n = 3;
  int winding = 1;
  double r_k = 1.0;
  double d = 0.0;
  double start_angle = 0.0;
  double tol = kDefaultTolerance;
  int frames = 36;
  int width = 800;
  bool as_json = false;
  std::string in_path;
  std::string out_path;
  RenderOptions render_opt;

  CLI::App* solve = app.add_subcommand("solve", "solve for the inscribed-circle radius that closes the polygon");
  solve->add_option("--n", n, "vertex count")->required();
  solve->add_option("--winding", winding, "orbit winding number (default 1)");
  solve->add_option("--rk", r_k, "circumcircle radius")->required();
  solve->add_option("--d", d, "distance between the circle centers")->required();
  solve->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* generate = app.add_subcommand("generate", "solve, trace, verify, and write a scene file");
  generate->add_option("--n", n, "vertex count")->required();
  generate->add_option("--winding", winding, "orbit winding number (default 1)");
  generate->add_option("--rk", r_k, "circumcircle radius")->required();
  generate->add_option("--d", d, "distance between the circle centers")->required();
  generate->add_option("--start-angle", start_angle, "start vertex angle on the circumcircle");
  generate->add_option("--out", out_path, "output scene path")->required();
  generate->add_option("--tol", tol, "verification tolerance")->envname("BICENT_TOL");

  CLI::App* verify = app.add_subcommand("verify", "recompute and check all residuals of a scene file");
  verify->add_option("file", in_path, "scene JSON path")->required();
  verify->add_option("--tol", tol, "verification tolerance")->envname("BICENT_TOL");
  verify->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* render = app.add_subcommand("render", "render a scene file to SVG");
  render->add_option("file", in_path, "scene JSON path")->required();
  render->add_option("--out", out_path, "output SVG path")->required();
  render->add_option("--width", width, "output width in pixels (default 800)");
  render->add_flag("--show-excircles", render_opt.show_excircles, "draw the excircles");
  render->add_flag("--show-bisectors", render_opt.show_bisectors, "draw the bisector segments");

  CLI::App* sweep = app.add_subcommand("sweep", "trace scenes over equally spaced start angles");
  sweep->add_option("--n", n, "vertex count")->required();
  sweep->add_option("--winding", winding, "orbit winding number (default 1)");
  sweep->add_option("--rk", r_k, "circumcircle radius")->required();
  sweep->add_option("--d", d, "distance between the circle centers")->required();
  sweep->add_option("--frames", frames, "number of start angles")->required();
  sweep->add_option("--out", out_path, "output directory")->required();
  sweep->add_option("--tol", tol, "invariance tolerance")->envname("BICENT_TOL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(n, winding, r_k, d, as_json);
    if (generate->parsed()) return run_generate(n, winding, r_k, d, start_angle, out_path, tol);
    if (verify->parsed()) return run_verify(in_path, tol, as_json);
    if (render->parsed()) {
      render_opt.width_px = width;
      return run_render(in_path, out_path, render_opt);
    }
    if (sweep->parsed()) {
      SweepOptions options;
      options.n = n;
      options.winding = winding;
      options.r_k = r_k;
      options.d = d;
      options.frames = frames;
      options.tol = tol;
      return run_sweep_cmd(options, out_path);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace bicentric
