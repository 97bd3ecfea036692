#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "minksurf/sampling.hpp"

namespace minksurf {

/// Which of the four coordinates to leave out of the 3-D mesh projection:
/// index 3 near theta = 0, index 0 near theta = pi, otherwise -1 meaning
/// project to (x1, x2, x3).
int default_drop_axis(double theta, double tol = 1e-6);

/// Wavefront OBJ: grid vertices plus quad cells split into two triangles.
/// Output is byte-stable for a given surface.
void write_obj(std::ostream& os, const SampledSurface& surface, int drop_axis);

/// Per-node field table; one row per grid node, fixed column order:
/// u,v,F0..F3,lambda2,K_closed,K_numeric,tau0..tau3,nu0..nu3,is_planar.
void write_csv(std::ostream& os, const SampledSurface& surface, const CurvatureField& field);

/// One validation check outcome. `detail` feeds the human-readable report
/// only; the JSON-lines schema is exactly {check, worst_value, tolerance,
/// pass}.
struct CheckResult {
  std::string name;
  double worst_value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

void write_report_jsonl(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace minksurf
