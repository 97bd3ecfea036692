#include "minksurf/association.hpp"

#include <cmath>
#include <numbers>
#include <limits>

namespace minksurf {

namespace {

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// d/dw of a sampled real component by central differences at node (i, j).
Complex component_dw(const SampledSurface& s, int comp, int i, int j) {
  const double gu = (s.at(i + 1, j).point[comp] - s.at(i - 1, j).point[comp]) / (2.0 * s.du());
  const double gv = (s.at(i, j + 1).point[comp] - s.at(i, j - 1).point[comp]) / (2.0 * s.dv());
  return {0.5 * gu, -0.5 * gv};
}

double component_range(const SampledSurface& s, int comp) {
  double lo = s.nodes.front().point[comp];
  double hi = lo;
  for (const SurfaceNode& n : s.nodes) {
    lo = std::min(lo, n.point[comp]);
    hi = std::max(hi, n.point[comp]);
  }
  return hi - lo;
}

}  // namespace

PairReport pair_check(const SampledSurface& x, const SampledSurface& y, double h,
                      const PairTolerances& tol) {
  if (x.nu != y.nu || x.nv != y.nv) throw GridMismatch("pair surfaces have different grid sizes");
  if (x.nu < 3 || x.nv < 3) throw GridMismatch("pair grids need at least 3x3 nodes");
  constexpr double kGridRel = 1e-9;
  if (!close(x.domain.u_min, y.domain.u_min, kGridRel) ||
      !close(x.domain.u_max, y.domain.u_max, kGridRel) ||
      !close(x.domain.v_min, y.domain.v_min, kGridRel) ||
      !close(x.domain.v_max, y.domain.v_max, kGridRel))
    throw GridMismatch("pair surfaces are sampled over different rectangles");
  if (!close(x.du(), h, 1e-6) || !close(x.dv(), h, 1e-6))
    throw GridMismatch("grid spacing does not match the requested step");

  PairReport report;
  report.grid_spacing = std::max(x.du(), x.dv());
  report.x_slice_deviation = component_range(x, 3);
  report.y_slice_deviation = component_range(y, 0);

  for (int j = 1; j + 1 < x.nv; ++j) {
    for (int i = 1; i + 1 < x.nu; ++i) {
      const Complex x0 = component_dw(x, 0, i, j);
      const Complex x1 = component_dw(x, 1, i, j);
      const Complex x2 = component_dw(x, 2, i, j);
      const Complex y1 = component_dw(y, 1, i, j);
      const Complex y2 = component_dw(y, 2, i, j);
      const Complex y3 = component_dw(y, 3, i, j);
      const std::array<double, 3> r{std::abs(y3 - x0), std::abs(y1 + Complex(0, 1) * x2),
                                    std::abs(y2 - Complex(0, 1) * x1)};
      for (int k = 0; k < 3; ++k) {
        if (r[static_cast<std::size_t>(k)] > report.max_residuals[static_cast<std::size_t>(k)]) {
          report.max_residuals[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)];
          report.worst_w = x.at(i, j).w;
        }
      }
    }
  }
  report.verdict = report.max_residuals[0] < tol.residual &&
                   report.max_residuals[1] < tol.residual &&
                   report.max_residuals[2] < tol.residual &&
                   report.x_slice_deviation < tol.slice && report.y_slice_deviation < tol.slice;
  return report;
}

Complex graph_jacobian(const SurfaceData& sd, Complex w) {
  const Complex mu = sd.mu(w);
  const Complex a = sd.a(w);
  const Complex xw = 2.0 * mu * a;
  const Complex yw = mu * (1.0 + a * a);
  return xw * std::conj(yw) - std::conj(xw) * yw;
}

GraphReport graph_admissibility(const SurfaceData& sd, int nu, int nv, double tol) {
  GraphReport report;
  report.min_abs_im_a = std::numeric_limits<double>::infinity();
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i) {
      const Complex w = sd.domain().node(i, j, nu, nv);
      const double im = std::abs(sd.a(w).imag());
      if (im < report.min_abs_im_a) {
        report.min_abs_im_a = im;
        report.argmin_w = w;
      }
      if (im <= tol) report.near_zero_nodes.push_back(w);
    }
  report.admissible = report.min_abs_im_a > tol;
  return report;
}

PlanarSetKind planar_discreteness_scan(const expr::HolomorphicFn& a, const DomainRect& scan,
                                       int nu, int nv, double tol) {
  bool any_nonzero = false;
  for (int j = 0; j < nv && !any_nonzero; ++j)
    for (int i = 0; i < nu; ++i)
      if (std::abs(expr::eval(*a.deriv, scan.node(i, j, nu, nv))) >= tol) {
        any_nonzero = true;
        break;
      }
  if (!any_nonzero) return PlanarSetKind::Everywhere;
  const std::vector<PlanarPoint> roots = planar_points(a, scan, nu, nv, tol);
  if (roots.empty()) return PlanarSetKind::Empty;
  // Refined roots are deduplicated within one grid spacing; verify each is
  // isolated by probing a ring around it.
  const double ring = std::max(scan.width() / (nu - 1), scan.height() / (nv - 1));
  for (const PlanarPoint& root : roots) {
    for (int k = 0; k < 8; ++k) {
      const Complex probe = root.w + std::polar(ring, k * std::numbers::pi / 4.0);
      if (!scan.contains(probe, ring)) continue;
      if (std::abs(expr::eval(*a.deriv, probe)) < tol) return PlanarSetKind::Everywhere;
    }
  }
  return PlanarSetKind::Discrete;
}

PlanarSetKind planar_discreteness_scan(const SurfaceData& sd, int nu, int nv, double tol) {
  return planar_discreteness_scan(sd.a_fn(), sd.domain(), nu, nv, tol);
}

}  // namespace minksurf
