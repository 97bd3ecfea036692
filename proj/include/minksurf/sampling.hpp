#pragma once

#include <functional>
#include <vector>

#include "minksurf/geometry.hpp"

namespace minksurf {

/// One grid node of a sampled family member.
struct SurfaceNode {
  Complex w;
  RVec4 point;
  CVec4 fw;
  double lambda2 = 0.0;
  double k_closed = 0.0;
  bool is_planar = false;
  FrameAtPoint frame;
};

/// Regular nu x nv sampling of one family member over the data's rectangle.
/// Row-major storage, u varies fastest.
struct SampledSurface {
  double theta = 0.0;
  DomainRect domain;
  int nu = 0, nv = 0;
  std::vector<SurfaceNode> nodes;

  double du() const { return nu > 1 ? domain.width() / (nu - 1) : 0.0; }
  double dv() const { return nv > 1 ? domain.height() / (nv - 1) : 0.0; }
  const SurfaceNode& at(int i, int j) const {
    return nodes[static_cast<std::size_t>(j) * nu + i];
  }

  /// Sample an externally supplied immersion (closed-form fixtures, meshes
  /// from other tools). Only w and point are populated.
  static SampledSurface from_function(double theta, const DomainRect& domain, int nu, int nv,
                                      const std::function<RVec4(Complex)>& f);
};

/// Integrate the family member over a regular grid. Integration telescopes:
/// one column of base segments, then per-row accumulation between adjacent
/// nodes, so the integrand is evaluated O(nu * nv) times. Rows run in
/// parallel (jobs = 0 means all cores); results are written by index, so the
/// output is identical for any worker count.
SampledSurface sample_grid(const SurfaceData& sd, double theta, int nu, int nv, int jobs = 0,
                           const QuadratureOptions& opts = {});

/// Curvature comparison grid: closed form against the local
/// finite-difference oracle (Richardson-extrapolated 5-point stencil of
/// ln lambda^2 at fd_step).
struct CurvatureNode {
  Complex w;
  double k_closed = 0.0;
  double k_numeric = 0.0;
  bool is_planar = false;
};
struct CurvatureField {
  double theta = 0.0;
  int nu = 0, nv = 0;
  double fd_step = 0.0;
  std::vector<CurvatureNode> nodes;
};
CurvatureField curvature_field(const SurfaceData& sd, double theta, int nu, int nv,
                               double fd_step = 1e-3, int jobs = 0);

/// Max-norm residual of the Weingarten identity on an evaluation grid:
/// theta = 0 checks tau_w = eta conj(f_w); theta = pi checks the Euclidean
/// analogue nu_w = xi conj(f_w). Derivatives are central differences with
/// step h on local stencils.
struct WeingartenCheckResult {
  double max_residual = 0.0;
  std::array<double, 4> component_residuals{};
  Complex worst_w;
};
WeingartenCheckResult weingarten_check(const SurfaceData& sd, double theta,
                                       const DomainRect& patch, int nu, int nv, double h);

}  // namespace minksurf
