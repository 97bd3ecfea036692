#include "minksurf/config.hpp"

#include <fstream>
#include <json.hpp>

namespace minksurf {

namespace {

using nlohmann::json;

template <std::size_t N>
std::array<double, N> fixed_array(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != N)
    throw ConfigError("'" + key + "' must be an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    if (!j[k].is_number()) throw ConfigError("'" + key + "' must contain only numbers");
    out[k] = j[k].get<double>();
  }
  return out;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");

  ScenarioConfig cfg;
  if (!root.contains("surface") || !root["surface"].is_object())
    throw ConfigError("config needs a 'surface' table");
  const json& surf = root["surface"];
  if (!surf.contains("a") || !surf["a"].is_string())
    throw ConfigError("'surface.a' must be an expression string");
  if (!surf.contains("mu") || !surf["mu"].is_string())
    throw ConfigError("'surface.mu' must be an expression string");
  cfg.a_expr = surf["a"].get<std::string>();
  cfg.mu_expr = surf["mu"].get<std::string>();
  if (!surf.contains("domain")) throw ConfigError("'surface.domain' is required");
  const auto dom = fixed_array<4>(surf["domain"], "surface.domain");
  cfg.domain = DomainRect{dom[0], dom[1], dom[2], dom[3]};
  if (!cfg.domain.nondegenerate()) throw ConfigError("'surface.domain' rectangle is degenerate");
  if (!surf.contains("w0")) throw ConfigError("'surface.w0' is required");
  cfg.w0 = fixed_array<2>(surf["w0"], "surface.w0");
  if (surf.contains("P")) cfg.p = fixed_array<4>(surf["P"], "surface.P");
  if (surf.contains("Q")) cfg.q = fixed_array<4>(surf["Q"], "surface.Q");

  if (root.contains("thetas")) {
    if (!root["thetas"].is_array() || root["thetas"].empty())
      throw ConfigError("'thetas' must be a non-empty array");
    cfg.thetas.clear();
    for (const json& t : root["thetas"]) {
      if (!t.is_number()) throw ConfigError("'thetas' must contain only numbers");
      cfg.thetas.push_back(t.get<double>());
    }
  }
  if (root.contains("grid")) {
    const auto grid = fixed_array<2>(root["grid"], "grid");
    cfg.nu = static_cast<int>(grid[0]);
    cfg.nv = static_cast<int>(grid[1]);
    if (cfg.nu < 2 || cfg.nv < 2) throw ConfigError("'grid' must be at least 2x2");
  }
  if (root.contains("tolerances")) {
    if (!root["tolerances"].is_object()) throw ConfigError("'tolerances' must be a table");
    for (const auto& [name, value] : root["tolerances"].items()) {
      if (!value.is_number()) throw ConfigError("tolerance '" + name + "' must be a number");
      cfg.tolerances[name] = value.get<double>();
    }
  }
  if (root.contains("outputs")) {
    if (!root["outputs"].is_array()) throw ConfigError("'outputs' must be an array");
    for (const json& o : root["outputs"]) {
      if (!o.is_object() || !o.contains("kind") || !o.contains("path"))
        throw ConfigError("each output needs 'kind' and 'path'");
      const std::string kind = o["kind"].get<std::string>();
      ExportRequest req;
      if (kind == "obj")
        req.kind = ExportRequest::Kind::Obj;
      else if (kind == "csv")
        req.kind = ExportRequest::Kind::Csv;
      else if (kind == "report")
        req.kind = ExportRequest::Kind::Report;
      else
        throw ConfigError("unknown output kind '" + kind + "'");
      req.path = o["path"].get<std::string>();
      cfg.outputs.push_back(req);
    }
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

ScenarioConfig ScenarioConfig::for_example(ExampleId id) {
  const ExampleScenario ex = make_example(id);
  ScenarioConfig cfg;
  cfg.a_expr = ex.a_expr;
  cfg.mu_expr = ex.mu_expr;
  cfg.domain = ex.data.domain();
  cfg.w0 = {ex.data.base_point().real(), ex.data.base_point().imag()};
  cfg.thetas = {0.0, std::numbers::pi};
  return cfg;
}

SurfaceData ScenarioConfig::build_surface() const {
  return SurfaceData::create(expr::HolomorphicFn::from_source(a_expr),
                             expr::HolomorphicFn::from_source(mu_expr), domain,
                             Complex(w0[0], w0[1]), RVec4{p}, RVec4{q},
                             tolerance("regularity", kRegularityEps));
}

}  // namespace minksurf
