#include "bicentric/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace bicentric {

namespace {

struct FrameData {
  BicentricScene scene;
  double positional_defect = 0.0;
};

}  // namespace

SweepResult run_sweep(const SweepOptions& options) {
  if (options.frames < 1) {
    raise(ErrorCode::InvalidArgument, "run_sweep: frames must be >= 1");
  }
  const CirclePair pair = solve_closure_rc(options.n, options.winding, options.r_k, options.d);
  const Circle predicted = predicted_circle_e(pair);

  std::vector<FrameData> frames = map_indexed<FrameData>(
      static_cast<std::size_t>(options.frames),
      [&](std::size_t i) {
        const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(options.frames);
        FrameData frame;
        frame.positional_defect =
            trace_polygon(pair, a, options.n, options.winding).defect.positional_defect;
        frame.scene = make_scene(pair, options.n, options.winding, a);
        frame.scene.reports = verify_scene(frame.scene, options.tol);
        return frame;
      },
      options.exec);

  SweepResult out;
  out.frames.reserve(frames.size());
  out.summary.r_c = pair.c.radius;
  bool reports_ok = true;
  for (FrameData& frame : frames) {
    out.summary.max_positional_defect =
        std::max(out.summary.max_positional_defect, frame.positional_defect);
    for (const Point2& m : frame.scene.excenters.excenters) {
      out.summary.max_excenter_deviation =
          std::max(out.summary.max_excenter_deviation,
                   std::abs(distance(m, predicted.center) - predicted.radius) / options.r_k);
    }
    reports_ok = reports_ok && frame.scene.reports->overall_pass;
    out.frames.push_back(std::move(frame.scene));
  }
  out.summary.pass = reports_ok && out.summary.max_positional_defect <= options.tol &&
                     out.summary.max_excenter_deviation <= options.tol;
  return out;
}

std::string summary_to_json(const SweepOptions& options, const SweepSummary& summary) {
  std::string out;
  out += "{\"frames\":";
  out += std::to_string(options.frames);
  out += ",\"n\":";
  out += std::to_string(options.n);
  out += ",\"winding\":";
  out += std::to_string(options.winding);
  out += ",\"r_k\":";
  detail::append_json_double(out, options.r_k);
  out += ",\"d\":";
  detail::append_json_double(out, options.d);
  out += ",\"r_c\":";
  detail::append_json_double(out, summary.r_c);
  out += ",\"tolerance\":";
  detail::append_json_double(out, options.tol);
  out += ",\"max_positional_defect\":";
  detail::append_json_double(out, summary.max_positional_defect);
  out += ",\"max_excenter_deviation\":";
  detail::append_json_double(out, summary.max_excenter_deviation);
  out += summary.pass ? ",\"pass\":true}" : ",\"pass\":false}";
  return out;
}

}  // namespace bicentric
