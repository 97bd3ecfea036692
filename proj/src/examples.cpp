#include "minksurf/examples.hpp"

#include <cmath>
#include <numbers>

namespace minksurf {

std::optional<ExampleId> example_from_string(std::string_view id) {
  if (id == "ex36") return ExampleId::Ex36;
  if (id == "ex37") return ExampleId::Ex37;
  if (id == "ex38") return ExampleId::Ex38;
  return std::nullopt;
}

std::string to_string(ExampleId id) {
  switch (id) {
    case ExampleId::Ex36: return "ex36";
    case ExampleId::Ex37: return "ex37";
    case ExampleId::Ex38: return "ex38";
  }
  return "?";
}

namespace {

SurfaceData build(const std::string& a, const std::string& mu, DomainRect dom, Complex w0) {
  return SurfaceData::create(expr::HolomorphicFn::from_source(a),
                             expr::HolomorphicFn::from_source(mu), dom, w0);
}

// a = sin w, mu = 1. The rectangle keeps sin^2 u + sinh^2 v < 1, i.e. clear
// of the |a| = 1 locus (which cuts v = +-0.355 at u = 1.2, so v stays
// within +-0.3).
ExampleScenario make_ex36() {
  const DomainRect dom{0.2, 1.2, -0.3, 0.3};
  ExampleScenario ex{
      "ex36",
      "a = sin(w), mu = 1; discrete planar points on the real axis",
      "sin(w)",
      "1",
      build("sin(w)", "1", dom, Complex(0.7, 0.0)),
      nullptr,
      nullptr,
      nullptr,
  };
  ex.closed_form_theta0 = [](Complex w) {
    const double u = w.real(), v = w.imag();
    return RVec4{{-4.0 * std::cos(u) * std::cosh(v),
                  3.0 * u - std::sin(u) * std::cos(u) *
                                (std::cosh(v) * std::cosh(v) + std::sinh(v) * std::sinh(v)),
                  -v + std::cosh(v) * std::sinh(v) *
                           (std::sin(u) * std::sin(u) - std::cos(u) * std::cos(u)),
                  0.0}};
  };
  ex.closed_form_pi = [](Complex w) {
    const double u = w.real(), v = w.imag();
    return RVec4{{0.0,
                  u + std::sin(u) * std::cos(u) *
                          (std::cosh(v) * std::cosh(v) + std::sinh(v) * std::sinh(v)),
                  -3.0 * v - std::cosh(v) * std::sinh(v) *
                                 (std::sin(u) * std::sin(u) - std::cos(u) * std::cos(u)),
                  -4.0 * std::cos(u) * std::cosh(v)}};
  };
  return ex;
}

// a = i e^w, mu = e^-w on u > 0; |a| = e^u stays above 1 and the curvature
// never vanishes. The full family integrates in elementary terms.
ExampleScenario make_ex37() {
  const DomainRect dom{0.5, 1.5, -0.5, 0.5};
  ExampleScenario ex{
      "ex37",
      "a = i*exp(w), mu = exp(-w); planar-point-free family",
      "i*exp(w)",
      "exp(-w)",
      build("i*exp(w)", "exp(-w)", dom, Complex(1.0, 0.0)),
      nullptr,
      nullptr,
      nullptr,
  };
  ex.closed_form = [](double theta, Complex w) {
    const double u = w.real(), v = w.imag();
    const double st = std::sin(theta), ct = std::cos(theta);
    return RVec4{{-2.0 * (u * st + v * (1.0 + ct)),
                  -2.0 * (std::exp(-u) * std::cos(v) + std::exp(u) * std::cos(v + theta)),
                  -2.0 * (std::exp(-u) * std::sin(v) + std::exp(u) * std::sin(v + theta)),
                  -2.0 * (-u * st + v * (1.0 - ct))}};
  };
  ex.closed_form_theta0 = [f = ex.closed_form](Complex w) { return f(0.0, w); };
  ex.closed_form_pi = [f = ex.closed_form](Complex w) { return f(std::numbers::pi, w); };
  return ex;
}

// a = i cos w / (sin w + 1), mu = -(i/4)(sin w + 1). Regular on the strip
// 0 < u < pi (|a| = 1 exactly on the lines u = k pi; sin w = -1 only at
// real w = -pi/2 + 2 k pi). The two slices are classical closed-form
// surfaces forming an associated pair.
ExampleScenario make_ex38() {
  const DomainRect dom{0.3, 1.2, -0.5, 0.5};
  ExampleScenario ex{
      "ex38",
      "a = i*cos(w)/(sin(w)+1); closed-form associated pair",
      "i*cos(w)/(sin(w)+1)",
      "-i/4*(sin(w)+1)",
      build("i*cos(w)/(sin(w)+1)", "-i/4*(sin(w)+1)", dom, Complex(0.75, 0.0)),
      nullptr,
      nullptr,
      nullptr,
  };
  ex.closed_form_theta0 = [](Complex w) {
    const double u = w.real(), v = w.imag();
    return RVec4{{std::sin(u) * std::cosh(v), std::sin(u) * std::sinh(v), u, 0.0}};
  };
  ex.closed_form_pi = [](Complex w) {
    const double u = w.real(), v = w.imag();
    return RVec4{{0.0, v, -std::cos(u) * std::cosh(v), std::sin(u) * std::cosh(v)}};
  };
  return ex;
}

}  // namespace

ExampleScenario make_example(ExampleId id) {
  switch (id) {
    case ExampleId::Ex36: return make_ex36();
    case ExampleId::Ex37: return make_ex37();
    case ExampleId::Ex38: return make_ex38();
  }
  throw Error("unknown example id");
}

}  // namespace minksurf
