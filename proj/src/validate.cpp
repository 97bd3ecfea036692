#include "minksurf/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace minksurf {

namespace {

constexpr unsigned kPathSeed = 7241529u;  // fixed: the pipeline is deterministic

std::string where(Complex w) {
  std::ostringstream os;
  os << "w = (" << w.real() << ", " << w.imag() << ")";
  return os.str();
}

struct Worst {
  double value = -std::numeric_limits<double>::infinity();
  Complex w;
  void offer(double v, Complex at) {
    if (v > value) {
      value = v;
      w = at;
    }
  }
  double finite() const { return std::isfinite(value) ? value : 0.0; }
};

std::vector<double> check_thetas(const CheckOptions& opts) {
  std::vector<double> thetas = opts.thetas;
  thetas.push_back(0.0);
  thetas.push_back(std::numbers::pi);
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               thetas.end());
  return thetas;
}

DomainRect centered_patch(const DomainRect& dom, double half_u, double half_v) {
  const double cu = 0.5 * (dom.u_min + dom.u_max);
  const double cv = 0.5 * (dom.v_min + dom.v_max);
  return DomainRect{cu - half_u, cu + half_u, cv - half_v, cv + half_v};
}

}  // namespace

CheckOptions CheckOptions::from_config(const ScenarioConfig& cfg) {
  CheckOptions opts;
  opts.nu = cfg.nu;
  opts.nv = cfg.nv;
  opts.thetas = cfg.thetas;
  opts.monge_isotropy_tol = cfg.tolerance("monge_isotropy", opts.monge_isotropy_tol);
  opts.monge_conformal_tol = cfg.tolerance("monge_conformal", opts.monge_conformal_tol);
  opts.frame_tol = cfg.tolerance("frame", opts.frame_tol);
  opts.curvature_tol = cfg.tolerance("curvature", opts.curvature_tol);
  opts.path_tol = cfg.tolerance("path_independence", opts.path_tol);
  opts.weingarten_tol = cfg.tolerance("weingarten", opts.weingarten_tol);
  opts.pair_tol = cfg.tolerance("pair", opts.pair_tol);
  opts.pair_slice_tol = cfg.tolerance("pair_slice", opts.pair_slice_tol);
  opts.planar_tol = cfg.tolerance("planar", opts.planar_tol);
  return opts;
}

ValidationReport run_checks(const SurfaceData& sd, const CheckOptions& opts) {
  ValidationReport report;
  const std::vector<double> thetas = check_thetas(opts);

  Worst monge_iso, monge_conf, frame_dev, frame_zero, curv, hemisphere;
  Worst sign0, sign_pi;
  for (const double theta : thetas) {
    const SampledSurface surf = sample_grid(sd, theta, opts.nu, opts.nv, opts.jobs);
    const bool is_zero = std::abs(std::remainder(theta, 2.0 * std::numbers::pi)) < 1e-12;
    const bool is_pi =
        std::abs(std::abs(std::remainder(theta, 2.0 * std::numbers::pi)) - std::numbers::pi) <
        1e-12;
    for (const SurfaceNode& node : surf.nodes) {
      const MongeResidual monge = monge_residual(node.fw, node.lambda2);
      monge_iso.offer(std::abs(monge.isotropy), node.w);
      monge_conf.offer(std::abs(monge.conformal) / (1.0 + node.lambda2), node.w);

      const FrameAtPoint& f = node.frame;
      const std::array<double, 10> identities{
          std::abs(lorentz_dot(f.tau, f.tau) + 1.0), std::abs(lorentz_dot(f.nu, f.nu) - 1.0),
          std::abs(lorentz_dot(f.tau, f.nu)),        std::abs(lorentz_dot(f.tau, f.e1)),
          std::abs(lorentz_dot(f.tau, f.e2)),        std::abs(lorentz_dot(f.nu, f.e1)),
          std::abs(lorentz_dot(f.nu, f.e2)),         std::abs(lorentz_dot(f.e1, f.e1) - 1.0),
          std::abs(lorentz_dot(f.e2, f.e2) - 1.0),   std::abs(lorentz_dot(f.e1, f.e2))};
      for (const double d : identities) frame_dev.offer(d, node.w);
      frame_zero.offer(std::max(std::abs(f.tau[3]), std::abs(f.nu[0])), node.w);

      if (is_zero) {
        sign0.offer(-node.k_closed, node.w);  // K >= 0 at theta = 0
        hemisphere.offer(phi_map(f.tau)[3], node.w);
      }
      if (is_pi) sign_pi.offer(node.k_closed, node.w);  // K <= 0 at theta = pi
    }

    const CurvatureField field = curvature_field(sd, theta, opts.nu, opts.nv, opts.fd_step,
                                                 opts.jobs);
    for (int j = 1; j + 1 < field.nv; ++j)
      for (int i = 1; i + 1 < field.nu; ++i) {
        const CurvatureNode& node = field.nodes[static_cast<std::size_t>(j) * field.nu + i];
        curv.offer(std::abs(node.k_closed - node.k_numeric) / (1.0 + std::abs(node.k_closed)),
                   node.w);
      }
  }

  const auto add = [&](const std::string& name, const Worst& w, double tol, bool pass_cond,
                       const std::string& extra = {}) {
    report.results.push_back(
        {name, w.finite(), tol, pass_cond, extra.empty() ? where(w.w) : extra + "; " + where(w.w)});
  };

  add("monge_isotropy", monge_iso, opts.monge_isotropy_tol,
      monge_iso.value < opts.monge_isotropy_tol);
  add("monge_conformal", monge_conf, opts.monge_conformal_tol,
      monge_conf.value < opts.monge_conformal_tol);
  add("frame_orthonormal", frame_dev, opts.frame_tol, frame_dev.value < opts.frame_tol);
  add("frame_component_zeros", frame_zero, opts.frame_zero_tol,
      frame_zero.value < opts.frame_zero_tol);
  add("curvature_cross_check", curv, opts.curvature_tol, curv.value < opts.curvature_tol);
  add("curvature_sign_theta0", sign0, opts.sign_tol, sign0.value <= opts.sign_tol,
      "worst = -min K(0;w)");
  add("curvature_sign_pi", sign_pi, opts.sign_tol, sign_pi.value <= opts.sign_tol,
      "worst = max K(pi;w)");
  add("gauss_image_hemisphere", hemisphere, 0.0, hemisphere.value < 0.0,
      "worst = max third component of Phi(tau)");

  // Path independence: straight segment against a random two-leg detour.
  {
    std::mt19937 rng(kPathSeed);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> uu(sd.domain().u_min, sd.domain().u_max);
    std::uniform_real_distribution<double> uv(sd.domain().v_min, sd.domain().v_max);
    Worst path;
    for (int k = 0; k < opts.path_samples; ++k) {
      const double theta = ut(rng);
      const Complex w(uu(rng), uv(rng));
      const Complex mid(uu(rng), uv(rng));
      const CVec4 straight = integrate_segment(sd, theta, sd.base_point(), w);
      const CVec4 detour = integrate_segment(sd, theta, sd.base_point(), mid) +
                           integrate_segment(sd, theta, mid, w);
      path.offer(max_abs_component(2.0 * real_part(straight) - 2.0 * real_part(detour)), w);
    }
    add("path_independence", path, opts.path_tol, path.value < opts.path_tol);
  }

  // Weingarten identity on a centered patch, both slices.
  {
    const DomainRect patch =
        centered_patch(sd.domain(), 0.25 * sd.domain().width(), 0.25 * sd.domain().height());
    Worst wein;
    for (const double theta : {0.0, std::numbers::pi}) {
      const WeingartenCheckResult r = weingarten_check(sd, theta, patch, 9, 9, opts.fd_step);
      wein.offer(r.max_residual, r.worst_w);
    }
    add("weingarten_residual", wein, opts.weingarten_tol, wein.value < opts.weingarten_tol);
  }

  // Associated-pair equations between the two distinguished slices, on a
  // small patch with grid pitch = fd_step.
  {
    const int half = 10;
    const DomainRect patch =
        centered_patch(sd.domain(), half * opts.fd_step, half * opts.fd_step);
    const SurfaceData patch_sd =
        SurfaceData::create(sd.a_fn(), sd.mu_fn(), patch,
                            Complex(0.5 * (patch.u_min + patch.u_max),
                                    0.5 * (patch.v_min + patch.v_max)));
    const SampledSurface x = sample_grid(patch_sd, 0.0, 2 * half + 1, 2 * half + 1, opts.jobs);
    const SampledSurface y =
        sample_grid(patch_sd, std::numbers::pi, 2 * half + 1, 2 * half + 1, opts.jobs);
    report.pair = pair_check(x, y, opts.fd_step, {opts.pair_tol, opts.pair_slice_tol});
    Worst pair_worst;
    pair_worst.offer(*std::max_element(report.pair.max_residuals.begin(),
                                       report.pair.max_residuals.end()),
                     report.pair.worst_w);
    add("pair_equations", pair_worst, opts.pair_tol, report.pair.verdict);
  }

  // Planar points and flatness classification.
  report.flatness = flatness_classify(sd, opts.nu, opts.nv, opts.planar_tol);
  report.planar = planar_points(sd, opts.nu, opts.nv, opts.planar_tol);
  {
    Worst planar_worst;
    bool all_refined = true;
    for (const PlanarPoint& p : report.planar) {
      planar_worst.offer(p.abs_a_deriv, p.w);
      all_refined = all_refined && p.refined;
    }
    std::ostringstream detail;
    detail << report.planar.size() << " root(s), "
           << (report.flatness == Flatness::FullyPlanar ? "fully_planar, K == 0"
                                                        : "has_nonplanar_point");
    report.results.push_back({"planar_points_refined", planar_worst.finite(), opts.planar_tol,
                              all_refined, detail.str()});
  }

  return report;
}

}  // namespace minksurf
