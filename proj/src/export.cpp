#include "minksurf/export.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

namespace minksurf {

namespace {

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

int default_drop_axis(double theta, double tol) {
  const double wrapped = std::remainder(theta, 2.0 * std::numbers::pi);
  if (std::abs(wrapped) < tol) return 3;
  if (std::abs(std::abs(wrapped) - std::numbers::pi) < tol) return 0;
  return -1;
}

void write_obj(std::ostream& os, const SampledSurface& surface, int drop_axis) {
  os << "# theta-family surface mesh, theta = " << fmt(surface.theta) << "\n";
  int axes[3];
  int n = 0;
  for (int k = 0; k < 4; ++k) {
    if (drop_axis >= 0 ? k != drop_axis : k != 0) axes[n++] = k;
  }
  for (const SurfaceNode& node : surface.nodes)
    os << "v " << fmt(node.point[axes[0]]) << ' ' << fmt(node.point[axes[1]]) << ' '
       << fmt(node.point[axes[2]]) << "\n";
  const auto vertex = [&](int i, int j) { return j * surface.nu + i + 1; };  // 1-based
  for (int j = 0; j + 1 < surface.nv; ++j) {
    for (int i = 0; i + 1 < surface.nu; ++i) {
      os << "f " << vertex(i, j) << ' ' << vertex(i + 1, j) << ' ' << vertex(i + 1, j + 1) << "\n";
      os << "f " << vertex(i, j) << ' ' << vertex(i + 1, j + 1) << ' ' << vertex(i, j + 1) << "\n";
    }
  }
}

void write_csv(std::ostream& os, const SampledSurface& surface, const CurvatureField& field) {
  if (field.nu != surface.nu || field.nv != surface.nv)
    throw GridMismatch("curvature field grid does not match the sampled surface");
  os << "u,v,F0,F1,F2,F3,lambda2,K_closed,K_numeric,"
        "tau0,tau1,tau2,tau3,nu0,nu1,nu2,nu3,is_planar\n";
  for (std::size_t idx = 0; idx < surface.nodes.size(); ++idx) {
    const SurfaceNode& node = surface.nodes[idx];
    const CurvatureNode& curv = field.nodes[idx];
    os << fmt(node.w.real()) << ',' << fmt(node.w.imag());
    for (int k = 0; k < 4; ++k) os << ',' << fmt(node.point[k]);
    os << ',' << fmt(node.lambda2) << ',' << fmt(node.k_closed) << ',' << fmt(curv.k_numeric);
    for (int k = 0; k < 4; ++k) os << ',' << fmt(node.frame.tau[k]);
    for (int k = 0; k < 4; ++k) os << ',' << fmt(node.frame.nu[k]);
    os << ',' << (node.is_planar ? 1 : 0) << "\n";
  }
}

void write_report_jsonl(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    nlohmann::json line;
    line["check"] = r.name;
    line["worst_value"] = r.worst_value;
    line["tolerance"] = r.tolerance;
    line["pass"] = r.pass;
    os << line.dump() << "\n";
  }
}

}  // namespace minksurf
