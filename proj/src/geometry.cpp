#include "minksurf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minksurf {

namespace {

double metric_poly(double s, double cos_theta) { return 1.0 - 2.0 * s * cos_theta + s * s; }

}  // namespace

double lambda2(const SurfaceData& sd, double theta, Complex w) {
  const double m2 = std::norm(sd.mu(w));
  const double s = std::norm(sd.a(w));
  return 4.0 * m2 * metric_poly(s, std::cos(theta));
}

double gauss_curvature_closed(const SurfaceData& sd, double theta, Complex w) {
  const double s = std::norm(sd.a(w));
  const double m2 = std::norm(sd.mu(w));
  const double ap2 = std::norm(sd.a_deriv(w));
  const double c = std::cos(theta);
  const double d = metric_poly(s, c);
  return ap2 * ((1.0 + s * s) * c - 2.0 * s) / (m2 * d * d * d);
}

LightlikePair lightlike_normals(Complex a, double theta) {
  const double s = std::norm(a);
  const Complex b = std::polar(1.0, theta) * a;
  return {RVec4{{1.0 + s, 2.0 * a.real(), 2.0 * a.imag(), s - 1.0}},
          RVec4{{1.0 + s, 2.0 * b.real(), 2.0 * b.imag(), 1.0 - s}}};
}

FrameAtPoint frame(const SurfaceData& sd, double theta, Complex w) {
  const Complex a = sd.a(w);
  const auto [l3, l0] = lightlike_normals(a, theta);
  const double pairing = -2.0 * lorentz_dot(l3, l0);  // 4 (1 - 2|a|^2 cos + |a|^4)
  if (!(pairing > 0.0))
    throw DegenerateMetric("lightlike normals degenerate (|a| = 1 crossing?)");
  const double inv = 1.0 / std::sqrt(pairing);
  FrameAtPoint out;
  out.tau = inv * (l3 + l0);
  out.nu = inv * (l3 - l0);
  const double l2 = lambda2(sd, theta, w);
  if (!(l2 > 0.0)) throw DegenerateMetric("conformal factor is not positive");
  out.lambda2 = l2;
  const CVec4 fw = integrand(sd, theta, w);
  const double inv_lambda = 1.0 / std::sqrt(l2);
  out.e1 = (2.0 * inv_lambda) * real_part(fw);        // f_u / lambda
  out.e2 = (-2.0 * inv_lambda) * imag_part(fw);       // f_v / lambda
  return out;
}

WeingartenData weingarten(const SurfaceData& sd, Complex w) {
  const Complex ap = sd.a_deriv(w);
  const Complex mu = sd.mu(w);
  const double gap = 1.0 - std::norm(sd.a(w));
  WeingartenData out;
  // On |a| > 1 data the future-directed normal is the sign-flipped branch
  // of the stereographic continuation, so the factor inherits sgn(gap);
  // below it reduces to the plain a' / (conj(mu) gap^2).
  out.eta = ap / (std::conj(mu) * gap * gap);
  if (gap < 0.0) out.eta = -out.eta;
  out.omega = gap < 0.0 ? -2.0 * mu * ap : 2.0 * mu * ap;
  if (out.eta != Complex(0.0, 0.0)) {
    out.psi = std::arg(out.eta);
    out.psi_defined = true;
  } else {
    out.psi = std::numeric_limits<double>::quiet_NaN();
    out.psi_defined = false;
  }
  return out;
}

Complex euclidean_weingarten_factor(const SurfaceData& sd, Complex w) {
  const Complex ap = sd.a_deriv(w);
  const Complex mu = sd.mu(w);
  const double sum = 1.0 + std::norm(sd.a(w));
  return ap / (std::conj(mu) * sum * sum);
}

namespace {

void require_hyperbolic(const RVec4& tau, double tol) {
  if (std::abs(lorentz_dot(tau, tau) + 1.0) > tol)
    throw InvalidHyperbolicPoint("tau is not unit timelike");
  if (!(tau[0] > 0.0)) throw InvalidHyperbolicPoint("tau is not future directed");
  if (std::abs(tau[3]) > tol) throw InvalidHyperbolicPoint("tau has a nonzero last component");
}

}  // namespace

Complex gauss_map_stereo(const RVec4& tau, double tol) {
  require_hyperbolic(tau, tol);
  return Complex(tau[1], tau[2]) / (tau[0] + 1.0);
}

RVec4 phi_map(const RVec4& tau, double tol) {
  require_hyperbolic(tau, tol);
  const double inv = 1.0 / tau[0];
  return RVec4{{0.0, tau[1] * inv, tau[2] * inv, -inv}};
}

std::vector<double> gauss_curvature_numeric(std::span<const double> lambda2_grid, int nu, int nv,
                                            double h) {
  if (nu < 1 || nv < 1 || lambda2_grid.size() != static_cast<std::size_t>(nu) * nv)
    throw Error("lambda^2 grid dimensions do not match");
  const auto at = [&](int i, int j) { return lambda2_grid[static_cast<std::size_t>(j) * nu + i]; };
  std::vector<double> k(lambda2_grid.size(), std::numeric_limits<double>::quiet_NaN());
  for (int j = 1; j + 1 < nv; ++j) {
    for (int i = 1; i + 1 < nu; ++i) {
      const double center = at(i, j);
      const std::array<double, 5> stencil{center, at(i - 1, j), at(i + 1, j), at(i, j - 1),
                                          at(i, j + 1)};
      for (const double v : stencil)
        if (!(v > 0.0)) throw DegenerateMetric("lambda^2 <= 0 inside a curvature stencil");
      const double lap = (std::log(stencil[1]) + std::log(stencil[2]) + std::log(stencil[3]) +
                          std::log(stencil[4]) - 4.0 * std::log(center)) /
                         (h * h);
      k[static_cast<std::size_t>(j) * nu + i] = -lap / (2.0 * center);
    }
  }
  return k;
}

double gauss_curvature_numeric_at(const SurfaceData& sd, double theta, Complex w, double h,
                                  bool richardson) {
  const auto one_step = [&](double step) {
    // 3x3 patch centered at w; only the cross of the stencil is read.
    std::array<double, 9> l2{};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i)
        l2[static_cast<std::size_t>(j) * 3 + i] =
            lambda2(sd, theta, w + Complex((i - 1) * step, (j - 1) * step));
    return gauss_curvature_numeric(l2, 3, 3, step)[4];
  };
  const double coarse = one_step(h);
  if (!richardson) return coarse;
  const double fine = one_step(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;  // cancels the O(h^2) stencil error
}

namespace {

struct NewtonResult {
  Complex w;
  double abs_value;
  bool converged;
};

NewtonResult refine_zero(const expr::ExprPtr& g, const expr::ExprPtr& gprime, Complex start,
                         const DomainRect& scan, double tol) {
  Complex w = start;
  double best = std::abs(expr::eval(*g, w));
  constexpr int kMaxIters = 60;
  for (int it = 0; it < kMaxIters; ++it) {
    if (best < tol) return {w, best, true};
    const Complex gv = expr::eval(*g, w);
    const Complex gp = expr::eval(*gprime, w);
    if (gp == Complex(0.0, 0.0)) break;
    const Complex next = w - gv / gp;
    // keep iterates from wandering far outside the scan window
    if (!scan.contains(next, std::max(scan.width(), scan.height()))) break;
    const double val = std::abs(expr::eval(*g, next));
    w = next;
    best = val;
  }
  return {w, best, best < tol};
}

}  // namespace

std::vector<PlanarPoint> planar_points(const expr::HolomorphicFn& a, const DomainRect& scan,
                                       int nu, int nv, double tol) {
  if (nu < 2 || nv < 2) throw Error("planar scan grid must be at least 2x2");
  const expr::ExprPtr& g = a.deriv;
  const expr::ExprPtr g2 = expr::differentiate(g);

  std::vector<double> mag(static_cast<std::size_t>(nu) * nv);
  double max_mag = 0.0;
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i) {
      const double m = std::abs(expr::eval(*g, scan.node(i, j, nu, nv)));
      mag[static_cast<std::size_t>(j) * nu + i] = m;
      max_mag = std::max(max_mag, m);
    }
  if (max_mag < tol) return {};  // a' vanishes identically: fully planar data

  const auto at = [&](int i, int j) { return mag[static_cast<std::size_t>(j) * nu + i]; };
  const double du = scan.width() / (nu - 1);
  const double dv = scan.height() / (nv - 1);
  const double spacing = std::max(du, dv);

  std::vector<PlanarPoint> roots;
  const auto push_unique = [&](const PlanarPoint& p) {
    for (const PlanarPoint& r : roots)
      if (std::abs(r.w - p.w) <= spacing) return;
    roots.push_back(p);
  };

  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nu; ++i) {
      const double m = at(i, j);
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj)
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= nu || jj >= nv || (di == 0 && dj == 0)) continue;
          if (at(ii, jj) < m) {
            is_min = false;
            break;
          }
        }
      if (!is_min) continue;
      // A genuine zero pulls |a'| to about |a''| * spacing near the cell.
      const double a2 = std::abs(expr::eval(*g2, scan.node(i, j, nu, nv)));
      if (m > 4.0 * (a2 + 1.0) * spacing) continue;
      const NewtonResult r =
          refine_zero(g, g2, scan.node(i, j, nu, nv), scan, tol);
      if (!scan.contains(r.w, 0.5 * spacing)) continue;
      push_unique({r.w, r.abs_value, r.converged});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const PlanarPoint& a_, const PlanarPoint& b_) {
    return a_.w.real() != b_.w.real() ? a_.w.real() < b_.w.real() : a_.w.imag() < b_.w.imag();
  });
  return roots;
}

std::vector<PlanarPoint> planar_points(const SurfaceData& sd, int nu, int nv, double tol) {
  return planar_points(sd.a_fn(), sd.domain(), nu, nv, tol);
}

Flatness flatness_classify(const SurfaceData& sd, int nu, int nv, double tol) {
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i)
      if (std::abs(sd.a_deriv(sd.domain().node(i, j, nu, nv))) >= tol)
        return Flatness::HasNonplanarPoint;
  return Flatness::FullyPlanar;
}

}  // namespace minksurf
