#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "minksurf/examples.hpp"
#include "minksurf/weierstrass.hpp"

namespace minksurf {

struct ExportRequest {
  enum class Kind { Obj, Csv, Report };
  Kind kind = Kind::Obj;
  std::string path;
};

/// Scenario description, loadable from a JSON file:
///
///   {
///     "surface": { "a": "sin(w)", "mu": "1",
///                  "domain": [0.2, 1.2, -0.3, 0.3], "w0": [0.7, 0.0],
///                  "P": [0,0,0,0], "Q": [0,0,0,0] },
///     "thetas": [0.0, 3.141592653589793],
///     "grid": [17, 17],
///     "tolerances": { "pair": 1e-5 },
///     "outputs": [ { "kind": "obj", "path": "mesh.obj" } ]
///   }
struct ScenarioConfig {
  std::string a_expr;
  std::string mu_expr;
  DomainRect domain;
  std::array<double, 2> w0{0.0, 0.0};
  std::array<double, 4> p{};
  std::array<double, 4> q{};
  std::vector<double> thetas{0.0};
  int nu = 17;
  int nv = 17;
  std::map<std::string, double> tolerances;
  std::vector<ExportRequest> outputs;

  static ScenarioConfig from_json_text(const std::string& text);
  static ScenarioConfig from_file(const std::string& path);
  static ScenarioConfig for_example(ExampleId id);

  /// Parse the expressions and validate regularity. Parse failures surface
  /// as SyntaxError/DisallowedFunction, regularity as RegularityError.
  SurfaceData build_surface() const;

  double tolerance(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
};

}  // namespace minksurf
