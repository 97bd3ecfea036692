#include "minksurf/weierstrass.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>
#include <limits>

namespace minksurf {

SurfaceData SurfaceData::create(expr::HolomorphicFn a, expr::HolomorphicFn mu, DomainRect domain,
                                Complex w0, RVec4 p, RVec4 q, double regularity_eps) {
  if (!domain.nondegenerate())
    throw RegularityError("domain rectangle is degenerate", w0);
  if (!domain.contains(w0))
    throw RegularityError("base point w0 lies outside the domain", w0);

  // Probe grid: fail fast on vanishing mu or on the |a| = 1 locus, where the
  // conformal factor of some family member degenerates. Near hits are caught
  // by the eps margin; transversal crossings of |a| = 1 between nodes show up
  // as a sign change of |a|^2 - 1 along grid edges.
  constexpr int kProbe = 64;
  double worst_mu = std::numeric_limits<double>::infinity();
  double worst_a = std::numeric_limits<double>::infinity();
  Complex worst_mu_w, worst_a_w;
  std::vector<double> a_gap_signed(static_cast<std::size_t>(kProbe) * kProbe);
  for (int j = 0; j < kProbe; ++j) {
    for (int i = 0; i < kProbe; ++i) {
      const Complex w = domain.node(i, j, kProbe, kProbe);
      const double abs_mu = std::abs(expr::eval(*mu.expr, w));
      const double gap = std::norm(expr::eval(*a.expr, w)) - 1.0;
      a_gap_signed[static_cast<std::size_t>(j) * kProbe + i] = gap;
      const double a_gap = std::abs(std::abs(expr::eval(*a.expr, w)) - 1.0);
      if (abs_mu < worst_mu) {
        worst_mu = abs_mu;
        worst_mu_w = w;
      }
      if (a_gap < worst_a) {
        worst_a = a_gap;
        worst_a_w = w;
      }
    }
  }
  if (worst_mu <= regularity_eps)
    throw RegularityError("regularity failure: |mu(w)| = " + std::to_string(worst_mu) +
                              " at w = (" + std::to_string(worst_mu_w.real()) + ", " +
                              std::to_string(worst_mu_w.imag()) + ")",
                          worst_mu_w);
  if (worst_a <= regularity_eps)
    throw RegularityError("regularity failure: ||a(w)| - 1| = " + std::to_string(worst_a) +
                              " at w = (" + std::to_string(worst_a_w.real()) + ", " +
                              std::to_string(worst_a_w.imag()) + ")",
                          worst_a_w);
  for (int j = 0; j < kProbe; ++j)
    for (int i = 0; i < kProbe; ++i) {
      const double g = a_gap_signed[static_cast<std::size_t>(j) * kProbe + i];
      const bool flip =
          (i + 1 < kProbe && g * a_gap_signed[static_cast<std::size_t>(j) * kProbe + i + 1] < 0.0) ||
          (j + 1 < kProbe && g * a_gap_signed[(static_cast<std::size_t>(j) + 1) * kProbe + i] < 0.0);
      if (flip) {
        const Complex w = domain.node(i, j, kProbe, kProbe);
        throw RegularityError("regularity failure: the |a(w)| = 1 locus crosses the domain near"
                              " w = (" + std::to_string(w.real()) + ", " +
                                  std::to_string(w.imag()) + ")",
                              w);
      }
    }

  expr::ExprPtr a_second = expr::differentiate(a.deriv);
  return SurfaceData(std::move(a), std::move(mu), std::move(a_second), domain, w0, p, q);
}

SurfaceData SurfaceData::with_mu_scaled(Complex c) const {
  expr::HolomorphicFn scaled =
      expr::HolomorphicFn::from_expr(expr::ExprNode::mul(expr::ExprNode::constant(c), mu_.expr));
  return create(a_, std::move(scaled), domain_, w0_, p_, q_);
}

CVec4 w_vector(Complex a, Complex b) {
  const Complex ab = a * b;
  return CVec4{{a + b, 1.0 + ab, Complex(0.0, 1.0) * (1.0 - ab), a - b}};
}

namespace {

CVec4 family_integrand(const SurfaceData& sd, Complex eitheta, Complex w) {
  const Complex a = sd.a(w);
  return sd.mu(w) * w_vector(a, eitheta * a);
}

// Gauss-Kronrod 7/15 on [-1, 1] (QUADPACK dqk15 constants). The embedded
// 7-point Gauss rule sits on the odd-index Kronrod abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEstimate {
  CVec4 integral;   // Kronrod value
  double error;     // max-abs component of (Kronrod - Gauss)
};

template <typename F>
GkEstimate gk15(const F& f, double t0, double t1) {
  const double c = 0.5 * (t0 + t1);
  const double h = 0.5 * (t1 - t0);
  const CVec4 fc = f(c);
  CVec4 kronrod = kWgk[7] * Complex(h) * fc;
  CVec4 gauss = kWg[3] * Complex(h) * fc;
  for (int k = 0; k < 7; ++k) {
    const CVec4 lo = f(c - h * kXgk[k]);
    const CVec4 hi = f(c + h * kXgk[k]);
    const CVec4 sum = lo + hi;
    kronrod += kWgk[k] * Complex(h) * sum;
    if (k % 2 == 1) gauss += kWg[k / 2] * Complex(h) * sum;
  }
  return {kronrod, max_abs_component(kronrod - gauss)};
}

}  // namespace

CVec4 integrand(const SurfaceData& sd, double theta, Complex w) {
  return family_integrand(sd, std::polar(1.0, theta), w);
}

MongeResidual monge_residual(const CVec4& fw, double lambda2) {
  const Complex isotropy = clorentz_dot(fw, fw);
  const Complex cross = clorentz_dot(fw, conj(fw));
  return {isotropy, 2.0 * cross.real() - lambda2};
}

CVec4 integrate_segment(const SurfaceData& sd, double theta, Complex from, Complex to,
                        const QuadratureOptions& opts) {
  if (from == to) return CVec4{};
  const Complex eitheta = std::polar(1.0, theta);
  const Complex d = to - from;
  const auto f = [&](double t) { return Complex(d) * family_integrand(sd, eitheta, from + t * d); };

  // Worst-interval-first adaptive bisection.
  struct Interval {
    double t0, t1;
    GkEstimate est;
  };
  std::vector<Interval> intervals;
  intervals.push_back({0.0, 1.0, gk15(f, 0.0, 1.0)});
  int splits = 0;
  for (;;) {
    double total_error = 0.0;
    std::size_t worst = 0;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      total_error += intervals[k].est.error;
      if (intervals[k].est.error > intervals[worst].est.error) worst = k;
    }
    if (total_error <= opts.abs_tol) break;
    if (++splits > opts.max_subdivisions)
      throw QuadratureNoConvergence("quadrature failed to reach tolerance " +
                                    std::to_string(opts.abs_tol) + " after " +
                                    std::to_string(opts.max_subdivisions) + " subdivisions");
    const Interval cur = intervals[worst];
    const double mid = 0.5 * (cur.t0 + cur.t1);
    intervals[worst] = {cur.t0, mid, gk15(f, cur.t0, mid)};
    intervals.push_back({mid, cur.t1, gk15(f, mid, cur.t1)});
  }
  CVec4 acc;
  for (const Interval& iv : intervals) acc += iv.est.integral;
  return acc;
}

ThetaSample integrate_point(const SurfaceData& sd, double theta, Complex w,
                            const QuadratureOptions& opts) {
  const CVec4 integral = integrate_segment(sd, theta, sd.base_point(), w, opts);
  return {theta, w, sd.offset_p() + 2.0 * real_part(integral), integrand(sd, theta, w)};
}

ThetaSample integrate_conjugate(const SurfaceData& sd, double theta, Complex w,
                                const QuadratureOptions& opts) {
  const CVec4 integral = integrate_segment(sd, theta, sd.base_point(), w, opts);
  return {theta, w, sd.offset_q() + 2.0 * imag_part(integral), integrand(sd, theta, w)};
}

}  // namespace minksurf
