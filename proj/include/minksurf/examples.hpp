#pragma once

#include <functional>
#include <optional>
#include <string>

#include "minksurf/weierstrass.hpp"

namespace minksurf {

/// Built-in surface families with known closed forms, used as regression
/// fixtures and as ready-made CLI scenarios.
enum class ExampleId { Ex36, Ex37, Ex38 };

std::optional<ExampleId> example_from_string(std::string_view id);
std::string to_string(ExampleId id);

struct ExampleScenario {
  std::string id;
  std::string description;
  std::string a_expr;
  std::string mu_expr;
  SurfaceData data;

  /// Closed form of the whole family, up to the additive offset; null when
  /// only the theta = 0 / pi slices are known in closed form.
  std::function<RVec4(double theta, Complex w)> closed_form;
  std::function<RVec4(Complex w)> closed_form_theta0;
  std::function<RVec4(Complex w)> closed_form_pi;
};

ExampleScenario make_example(ExampleId id);

/// Offset-free comparison helper: both sides evaluated as differences
/// against a reference point, so integration constants cancel.
inline RVec4 offset_normalized(const std::function<RVec4(Complex)>& f, Complex w, Complex wref) {
  return f(w) - f(wref);
}

}  // namespace minksurf
