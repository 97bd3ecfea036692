#include "minksurf/sampling.hpp"

#include <cmath>
#include <numbers>

#include "minksurf/parallel.hpp"

namespace minksurf {

SampledSurface SampledSurface::from_function(double theta, const DomainRect& domain, int nu,
                                             int nv, const std::function<RVec4(Complex)>& f) {
  SampledSurface out;
  out.theta = theta;
  out.domain = domain;
  out.nu = nu;
  out.nv = nv;
  out.nodes.resize(static_cast<std::size_t>(nu) * nv);
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i) {
      SurfaceNode& node = out.nodes[static_cast<std::size_t>(j) * nu + i];
      node.w = domain.node(i, j, nu, nv);
      node.point = f(node.w);
    }
  return out;
}

SampledSurface sample_grid(const SurfaceData& sd, double theta, int nu, int nv, int jobs,
                           const QuadratureOptions& opts) {
  if (nu < 2 || nv < 2) throw Error("sample grid must be at least 2x2");
  SampledSurface out;
  out.theta = theta;
  out.domain = sd.domain();
  out.nu = nu;
  out.nv = nv;
  out.nodes.resize(static_cast<std::size_t>(nu) * nv);

  // Base column: integrals from w0 to the first node of each row, chained
  // so each segment stays short.
  std::vector<CVec4> row_base(static_cast<std::size_t>(nv));
  {
    CVec4 acc = integrate_segment(sd, theta, sd.base_point(), sd.domain().node(0, 0, nu, nv), opts);
    row_base[0] = acc;
    for (int j = 1; j < nv; ++j) {
      acc += integrate_segment(sd, theta, sd.domain().node(0, j - 1, nu, nv),
                               sd.domain().node(0, j, nu, nv), opts);
      row_base[j] = acc;
    }
  }

  parallel_for(nv, jobs, [&](int j) {
    CVec4 acc = row_base[static_cast<std::size_t>(j)];
    for (int i = 0; i < nu; ++i) {
      const Complex w = sd.domain().node(i, j, nu, nv);
      if (i > 0)
        acc += integrate_segment(sd, theta, sd.domain().node(i - 1, j, nu, nv), w, opts);
      SurfaceNode& node = out.nodes[static_cast<std::size_t>(j) * nu + i];
      node.w = w;
      node.point = sd.offset_p() + 2.0 * real_part(acc);
      node.fw = integrand(sd, theta, w);
      node.lambda2 = lambda2(sd, theta, w);
      if (!(node.lambda2 > 0.0)) throw DegenerateMetric("conformal factor not positive on grid");
      node.k_closed = gauss_curvature_closed(sd, theta, w);
      node.is_planar = std::abs(sd.a_deriv(w)) < kPlanarTol;
      node.frame = frame(sd, theta, w);
    }
  });
  return out;
}

CurvatureField curvature_field(const SurfaceData& sd, double theta, int nu, int nv,
                               double fd_step, int jobs) {
  CurvatureField out;
  out.theta = theta;
  out.nu = nu;
  out.nv = nv;
  out.fd_step = fd_step;
  out.nodes.resize(static_cast<std::size_t>(nu) * nv);
  parallel_for(nu * nv, jobs, [&](int idx) {
    const int i = idx % nu;
    const int j = idx / nu;
    CurvatureNode& node = out.nodes[static_cast<std::size_t>(idx)];
    node.w = sd.domain().node(i, j, nu, nv);
    node.k_closed = gauss_curvature_closed(sd, theta, node.w);
    node.k_numeric = gauss_curvature_numeric_at(sd, theta, node.w, fd_step);
    node.is_planar = std::abs(sd.a_deriv(node.w)) < kPlanarTol;
  });
  return out;
}

WeingartenCheckResult weingarten_check(const SurfaceData& sd, double theta,
                                       const DomainRect& patch, int nu, int nv, double h) {
  const bool euclidean = std::abs(std::remainder(theta - std::numbers::pi, 2.0 * std::numbers::pi)) < 1e-9;
  const auto normal = [&](Complex w) -> RVec4 {
    const FrameAtPoint f = frame(sd, theta, w);
    return euclidean ? f.nu : f.tau;
  };

  WeingartenCheckResult result;
  std::vector<WeingartenCheckResult> per_row(static_cast<std::size_t>(nv));
  parallel_for(nv, 0, [&](int j) {
    WeingartenCheckResult local;
    for (int i = 0; i < nu; ++i) {
      const Complex w = patch.node(i, j, nu, nv);
      // normal_w = (normal_u - i normal_v) / 2, central differences
      const RVec4 nu_u = (normal(w + h) - normal(w - h)) / (2.0 * h);
      const RVec4 nu_v = (normal(w + Complex(0.0, h)) - normal(w - Complex(0.0, h))) / (2.0 * h);
      const Complex factor =
          euclidean ? euclidean_weingarten_factor(sd, w) : weingarten(sd, w).eta;
      const CVec4 predicted = factor * conj(integrand(sd, theta, w));
      for (int k = 0; k < 4; ++k) {
        const Complex fd(0.5 * nu_u[k], -0.5 * nu_v[k]);
        const double r = std::abs(fd - predicted[k]);
        local.component_residuals[static_cast<std::size_t>(k)] =
            std::max(local.component_residuals[static_cast<std::size_t>(k)], r);
        if (r > local.max_residual) {
          local.max_residual = r;
          local.worst_w = w;
        }
      }
    }
    per_row[static_cast<std::size_t>(j)] = local;
  });
  for (const WeingartenCheckResult& local : per_row) {
    for (int k = 0; k < 4; ++k)
      result.component_residuals[static_cast<std::size_t>(k)] =
          std::max(result.component_residuals[static_cast<std::size_t>(k)],
                   local.component_residuals[static_cast<std::size_t>(k)]);
    if (local.max_residual > result.max_residual) {
      result.max_residual = local.max_residual;
      result.worst_w = local.worst_w;
    }
  }
  return result;
}

}  // namespace minksurf
