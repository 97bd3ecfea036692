#pragma once

#include <vector>

#include "minksurf/association.hpp"
#include "minksurf/config.hpp"
#include "minksurf/export.hpp"

namespace minksurf {

/// Settings for the full validation pipeline. Tolerances are the library
/// defaults; scenario configs can override them by name.
struct CheckOptions {
  int nu = 17;
  int nv = 17;
  double fd_step = 1e-3;
  int path_samples = 20;
  int jobs = 0;
  std::vector<double> thetas;  // always augmented with {0, pi}

  double monge_isotropy_tol = 1e-10;
  double monge_conformal_tol = 1e-8;  // scaled by (1 + lambda^2)
  double frame_tol = 1e-10;
  double frame_zero_tol = 1e-15;
  double curvature_tol = 1e-4;  // relative, |Kc - Kn| / (1 + |Kc|)
  double sign_tol = 1e-12;
  double path_tol = 1e-8;
  double weingarten_tol = 1e-4;
  double pair_tol = 1e-5;
  double pair_slice_tol = 1e-8;
  double planar_tol = kPlanarTol;

  static CheckOptions from_config(const ScenarioConfig& cfg);
};

struct ValidationReport {
  std::vector<CheckResult> results;
  std::vector<PlanarPoint> planar;
  Flatness flatness = Flatness::HasNonplanarPoint;
  PairReport pair;

  bool all_pass() const {
    for (const CheckResult& r : results)
      if (!r.pass) return false;
    return true;
  }
};

/// Run every invariant suite against one surface datum: Monge residuals,
/// frame identities, curvature closed-vs-numeric, sign law, path
/// independence, Weingarten residual, Gauss-image hemisphere, planar points,
/// flatness, and the associated-pair equations between the theta = 0 and
/// theta = pi members.
ValidationReport run_checks(const SurfaceData& sd, const CheckOptions& opts = {});

}  // namespace minksurf
