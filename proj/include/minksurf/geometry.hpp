#pragma once

#include <span>
#include <vector>

#include "minksurf/weierstrass.hpp"

namespace minksurf {

/// |a'(w)| below this declares a planar point. a' is symbolic, so the only
/// noise is evaluation roundoff.
inline constexpr double kPlanarTol = 1e-10;

/// Conformal factor lambda^2 = 4 |mu|^2 (1 - 2 |a|^2 cos theta + |a|^4).
double lambda2(const SurfaceData& sd, double theta, Complex w);

/// Closed-form Gauss curvature of the family member at w:
///   K = |a'|^2 ((1 + |a|^4) cos theta - 2 |a|^2) /
///       (|mu|^2 (1 - 2 |a|^2 cos theta + |a|^4)^3).
/// The cube in the denominator is the variant the finite-difference oracle
/// confirms; at theta = 0 it specializes to |a'|^2 / (|mu|^2 (1 - |a|^2)^4).
double gauss_curvature_closed(const SurfaceData& sd, double theta, Complex w);

/// The two lightlike normal fields, evaluated from the disk coordinate a:
///   L3 = (1 + |a|^2, 2 Re a, 2 Im a, |a|^2 - 1)
///   L0 = (1 + |a|^2, 2 Re b, 2 Im b, 1 - |a|^2),  b = e^{i theta} a.
/// Both share the same |a|^2, so tau^3 and nu^0 cancel exactly in frame().
struct LightlikePair {
  RVec4 l3;
  RVec4 l0;
};
LightlikePair lightlike_normals(Complex a, double theta);

/// Orthonormal adapted frame at a point: timelike normal tau (future
/// directed), spacelike normal nu, and the normalized tangents f_u/lambda,
/// f_v/lambda. tau[3] and nu[0] are exact zeros by construction.
struct FrameAtPoint {
  RVec4 tau;
  RVec4 nu;
  RVec4 e1;
  RVec4 e2;
  double lambda2 = 0.0;
};
FrameAtPoint frame(const SurfaceData& sd, double theta, Complex w);

/// Weingarten data of the theta = 0 slice: tau_w = eta * conj(f_w) with
/// eta = a' / (conj(mu) (1 - |a|^2)^2), and the holomorphic
/// Omega = eta lambda^2 / 2 = 2 mu a'. psi = arg eta, flagged undefined at
/// eta = 0. On |a| > 1 data both eta and Omega carry an extra factor
/// sgn(1 - |a|^2), keeping the identity true for the future-directed tau
/// that frame() constructs.
struct WeingartenData {
  Complex eta;
  Complex omega;
  double psi = 0.0;
  bool psi_defined = false;
};
WeingartenData weingarten(const SurfaceData& sd, Complex w);

/// Euclidean slice (theta = pi) analogue: nu_w = xi * conj(f_w) with
/// xi = a' / (conj(mu) (1 + |a|^2)^2).
Complex euclidean_weingarten_factor(const SurfaceData& sd, Complex w);

/// Hyperbolic stereographic disk coordinate of a unit timelike tau with
/// tau[3] = 0: (tau1 + i tau2) / (tau0 + 1). Throws InvalidHyperbolicPoint
/// unless <tau,tau> = -1, tau0 > 0 and tau3 = 0 within tol.
Complex gauss_map_stereo(const RVec4& tau, double tol = 1e-8);

/// Bi-holomorphism from the hyperboloid onto the open south hemisphere:
/// tau -> (0, tau1, tau2, -1) / tau0.
RVec4 phi_map(const RVec4& tau, double tol = 1e-8);

/// Finite-difference curvature on a uniform grid of lambda^2 values
/// (row-major, nu columns, spacing h in both directions):
/// K = -(1 / (2 lambda^2)) * Laplacian(ln lambda^2), 5-point stencil.
/// Boundary nodes have no stencil and come back as NaN. Throws
/// DegenerateMetric if lambda^2 <= 0 anywhere a stencil reads.
std::vector<double> gauss_curvature_numeric(std::span<const double> lambda2_grid, int nu, int nv,
                                            double h);

/// Same oracle on a local 5-point stencil around one point, with optional
/// Richardson extrapolation (h and h/2) to kill the O(h^2) term.
double gauss_curvature_numeric_at(const SurfaceData& sd, double theta, Complex w, double h,
                                  bool richardson = true);

/// A refined (or flagged unrefined) zero of a'.
struct PlanarPoint {
  Complex w;
  double abs_a_deriv = 0.0;
  bool refined = false;
};

/// Scan a rectangle for zeros of a': local-minimum cells of |a'| on an
/// nu x nv grid, refined by complex Newton (the two-dimensional Newton on
/// (Re a', Im a') collapses to w <- w - a'/a'' for holomorphic a'),
/// deduplicated within one grid spacing. Needs no metric regularity, only
/// the function; a fully-flat a' (constant a) yields an empty list --
/// callers detect that case through flatness_classify.
std::vector<PlanarPoint> planar_points(const expr::HolomorphicFn& a, const DomainRect& scan,
                                       int nu, int nv, double tol = kPlanarTol);
std::vector<PlanarPoint> planar_points(const SurfaceData& sd, int nu, int nv,
                                       double tol = kPlanarTol);

enum class Flatness { FullyPlanar, HasNonplanarPoint };

/// FullyPlanar iff max |a'| over the grid stays below tol; equivalent to
/// K identically zero for every theta.
Flatness flatness_classify(const SurfaceData& sd, int nu, int nv, double tol = kPlanarTol);

}  // namespace minksurf
