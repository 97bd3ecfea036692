#pragma once

#include <array>

#include "minksurf/sampling.hpp"

namespace minksurf {

struct PairTolerances {
  double residual = 1e-5;  // per-equation max residual, at grid spacing ~1e-3
  double slice = 1e-8;     // allowed wobble of the constant slice components
};

/// Result of checking the first-order system that couples an associated
/// pair: Y3_w = X0_w, Y1_w = -i X2_w, Y2_w = i X1_w.
struct PairReport {
  std::array<double, 3> max_residuals{};  // one per equation
  double grid_spacing = 0.0;
  bool verdict = false;
  // How far the slice-constant components wander: X's last, Y's first.
  double x_slice_deviation = 0.0;
  double y_slice_deviation = 0.0;
  Complex worst_w;
};

/// Finite-difference check of the associated-pair equations on two surfaces
/// sampled over the same w-grid. X is the Lorentzian slice (last component
/// constant), Y the Euclidean one (first component constant); violations of
/// those slice conditions count against the verdict rather than erroring, so
/// mismatched pairs simply come back false. Throws GridMismatch when the
/// grids differ or their spacing is not h.
PairReport pair_check(const SampledSurface& x, const SampledSurface& y, double h,
                      const PairTolerances& tol = {});

/// Jacobian x_w conj(y_w) - conj(x_w) y_w of the graph chart candidate, with
/// x_w = 2 mu a and y_w = mu (1 + a^2). Equals 4i |mu|^2 (1 - |a|^2) Im(a),
/// so it vanishes exactly where a is real.
Complex graph_jacobian(const SurfaceData& sd, Complex w);

struct GraphReport {
  double min_abs_im_a = 0.0;
  Complex argmin_w;
  bool admissible = false;
  std::vector<Complex> near_zero_nodes;  // grid nodes with |Im a| <= tol
};

/// Graph-chart admissibility: Im a must stay away from zero on the grid.
GraphReport graph_admissibility(const SurfaceData& sd, int nu, int nv, double tol = 1e-9);

enum class PlanarSetKind { Discrete, Everywhere, Empty };

/// Classify the zero set of a' over a scan grid: empty, everywhere (constant
/// a), or isolated roots. Like planar_points this works on the bare
/// function; the zeros of a' may sit on the |a| = 1 locus where no regular
/// surface data exists.
PlanarSetKind planar_discreteness_scan(const expr::HolomorphicFn& a, const DomainRect& scan,
                                       int nu, int nv, double tol = kPlanarTol);
PlanarSetKind planar_discreteness_scan(const SurfaceData& sd, int nu, int nv,
                                       double tol = kPlanarTol);

}  // namespace minksurf
