#pragma once

#include <complex>
#include <utility>

#include "minksurf/expr.hpp"
#include "minksurf/minkowski.hpp"

namespace minksurf {

/// Default regularity margin: |mu| and ||a|-1| must stay above this on the
/// validation probe grid.
inline constexpr double kRegularityEps = 1e-9;

/// Axis-aligned rectangle in the w = u + iv parameter plane.
struct DomainRect {
  double u_min = 0.0, u_max = 1.0, v_min = 0.0, v_max = 1.0;

  double width() const { return u_max - u_min; }
  double height() const { return v_max - v_min; }
  bool nondegenerate() const { return u_min < u_max && v_min < v_max; }
  bool contains(Complex w, double pad = 0.0) const {
    return w.real() >= u_min - pad && w.real() <= u_max + pad && w.imag() >= v_min - pad &&
           w.imag() <= v_max + pad;
  }
  /// Grid node (i,j) of a regular nu x nv sampling, i varying along u.
  Complex node(int i, int j, int nu, int nv) const {
    const double u = nu > 1 ? u_min + width() * i / (nu - 1) : u_min;
    const double v = nv > 1 ? v_min + height() * j / (nv - 1) : v_min;
    return {u, v};
  }
};

struct QuadratureOptions {
  double abs_tol = 1e-10;     // per-component absolute error target per segment
  int max_subdivisions = 256;  // interval splits before giving up
};

/// The Weierstrass data of a family: holomorphic a(w), mu(w), a convex
/// (rectangular) domain, base point w0 inside it, and the additive offsets P
/// (real-part family) and Q (imaginary-part family).
///
/// Construction validates regularity on a 64x64 probe grid: |mu(w)| and
/// ||a(w)| - 1| must exceed eps everywhere, otherwise the conformal factor
/// degenerates somewhere in the rectangle. Immutable afterwards; all
/// evaluations are pure and safe to share across threads.
class SurfaceData {
 public:
  static SurfaceData create(expr::HolomorphicFn a, expr::HolomorphicFn mu, DomainRect domain,
                            Complex w0, RVec4 p = {}, RVec4 q = {},
                            double regularity_eps = kRegularityEps);

  Complex a(Complex w) const { return expr::eval(*a_.expr, w); }
  Complex a_deriv(Complex w) const { return expr::eval(*a_.deriv, w); }
  Complex a_second(Complex w) const { return expr::eval(*a_second_, w); }
  Complex mu(Complex w) const { return expr::eval(*mu_.expr, w); }
  Complex mu_deriv(Complex w) const { return expr::eval(*mu_.deriv, w); }

  const expr::HolomorphicFn& a_fn() const { return a_; }
  const expr::HolomorphicFn& mu_fn() const { return mu_; }
  const DomainRect& domain() const { return domain_; }
  Complex base_point() const { return w0_; }
  const RVec4& offset_p() const { return p_; }
  const RVec4& offset_q() const { return q_; }

  /// Same data with mu replaced by c*mu (regularity is scale-invariant for
  /// |c| = 1; revalidated anyway).
  SurfaceData with_mu_scaled(Complex c) const;

 private:
  SurfaceData(expr::HolomorphicFn a, expr::HolomorphicFn mu, expr::ExprPtr a2, DomainRect domain,
              Complex w0, RVec4 p, RVec4 q)
      : a_(std::move(a)),
        mu_(std::move(mu)),
        a_second_(std::move(a2)),
        domain_(domain),
        w0_(w0),
        p_(p),
        q_(q) {}

  expr::HolomorphicFn a_;
  expr::HolomorphicFn mu_;
  expr::ExprPtr a_second_;  // second derivative of a, for root refinement
  DomainRect domain_;
  Complex w0_;
  RVec4 p_, q_;
};

/// W(a,b) = (a + b, 1 + ab, i(1 - ab), a - b); a null direction for every
/// choice of a, b.
CVec4 w_vector(Complex a, Complex b);

/// Pointwise integrand of the family: mu(w) * W(a(w), e^{i theta} a(w)).
CVec4 integrand(const SurfaceData& sd, double theta, Complex w);

/// Residuals of the two conformal-immersion identities for a derivative
/// vector f_w: isotropy <f_w, f_w> and 2<f_w, conj f_w> - lambda^2. Both
/// vanish for valid data.
struct MongeResidual {
  Complex isotropy;
  double conformal;
};
MongeResidual monge_residual(const CVec4& fw, double lambda2);

/// One evaluated point of the family.
struct ThetaSample {
  double theta = 0.0;
  Complex w;
  RVec4 point;
  CVec4 fw;
};

/// Contour integral of the integrand along the straight segment [from, to],
/// by adaptive Gauss-Kronrod 7/15 bisection. Throws QuadratureNoConvergence
/// when the subdivision budget runs out.
CVec4 integrate_segment(const SurfaceData& sd, double theta, Complex from, Complex to,
                        const QuadratureOptions& opts = {});

/// F(theta; w) = P + 2 Re \int_{w0}^{w} mu W(a, e^{i theta} a) dxi, along the
/// straight segment (the rectangle is convex, so it stays inside).
ThetaSample integrate_point(const SurfaceData& sd, double theta, Complex w,
                            const QuadratureOptions& opts = {});

/// Conjugate family H(theta; w) = Q + 2 Im of the same integral.
ThetaSample integrate_conjugate(const SurfaceData& sd, double theta, Complex w,
                                const QuadratureOptions& opts = {});

}  // namespace minksurf
