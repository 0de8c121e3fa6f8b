#include "hyperslice/config.hpp"

#include <fstream>

namespace hyperslice {
namespace {

// Values built in code are signed; parsed text is unsigned.
bool non_negative_integer(const nlohmann::json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

double number(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  if (!j.at(key).is_number()) fail(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

std::vector<double> numbers(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  const json& arr = j.at(key);
  if (!arr.is_array()) fail(std::string("field '") + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const json& v : arr) {
    if (!v.is_number()) fail(std::string("field '") + key + "' must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

void expect_length(const std::vector<double>& v, int n, const char* what) {
  if (static_cast<int>(v.size()) != n)
    fail(std::string(what) + " has " + std::to_string(v.size()) + " entries but the dimension is " +
         std::to_string(n));
}

Vec to_vec(const std::vector<double>& v) {
  Vec x(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<int>(i)) = v[i];
  return x;
}

std::string type_of(const json& j) {
  if (!j.is_object()) fail("descriptor must be a JSON object");
  if (!j.contains("type") || !j.at("type").is_string()) fail("descriptor needs a string 'type'");
  return j.at("type").get<std::string>();
}

template <class F>
auto wrap_invalid(F&& build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string label_of(const json& j, const std::string& fallback) {
  if (j.contains("name")) {
    if (!j.at("name").is_string()) fail("'name' must be a string");
    return j.at("name").get<std::string>();
  }
  return fallback;
}

int integer(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

Body parse_body(const json& j, int n) {
  const std::string type = type_of(j);
  if (j.contains("dimension") && integer(j, "dimension", n) != n)
    fail("body declares dimension " + std::to_string(j.at("dimension").get<int>()) + " but the run uses n=" +
         std::to_string(n));
  return wrap_invalid([&]() -> Body {
    if (type == "ball") return make_ball(n, number_or(j, "radius", 1.0));
    if (type == "ellipsoid") {
      auto axes = numbers(j, "semi_axes");
      expect_length(axes, n, "semi_axes");
      return Body(n, Ellipsoid{axes});
    }
    if (type == "lp_ball") {
      std::vector<double> scales = j.contains("scales") ? numbers(j, "scales") : std::vector<double>(n, 1.0);
      expect_length(scales, n, "scales");
      return Body(n, LpBall{number(j, "p"), scales});
    }
    if (type == "cube") return make_cube(n, number_or(j, "half_width", 1.0));
    if (type == "cross_polytope") return make_cross_polytope(n, number_or(j, "radius", 1.0));
    if (type == "polytope") {
      if (!j.contains("normals") || !j.at("normals").is_array()) fail("polytope needs an array 'normals'");
      SymmetricPolytope p;
      for (const json& row : j.at("normals")) {
        json wrapper = {{"v", row}};
        auto v = numbers(wrapper, "v");
        expect_length(v, n, "polytope normal");
        p.facet_normals.push_back(to_vec(v));
      }
      p.offsets = numbers(j, "offsets");
      return Body(n, std::move(p));
    }
    fail("unknown body type '" + type + "'");
  });
}

Density parse_density(const json& j, int n) {
  const std::string type = type_of(j);
  return wrap_invalid([&]() -> Density {
    if (type == "constant") return make_constant(n, number_or(j, "value", 1.0));
    if (type == "gaussian") return make_gaussian(n, number_or(j, "sigma", 1.0));
    if (type == "anisotropic_gaussian") {
      auto d = numbers(j, "inverse_covariance_diagonal");
      expect_length(d, n, "inverse_covariance_diagonal");
      return Density(n, AnisotropicGaussian{d});
    }
    if (type == "rational_decay") return Density(n, RationalDecay{number(j, "s")});
    if (type == "cosine_perturbed") {
      if (!j.contains("base")) fail("cosine_perturbed needs a 'base' density");
      auto w = numbers(j, "frequency");
      expect_length(w, n, "frequency");
      auto base = std::make_shared<const Density>(parse_density(j.at("base"), n));
      return Density(n, CosinePerturbed{base, number(j, "amplitude"), to_vec(w)});
    }
    fail("unknown density type '" + type + "'");
  });
}

std::vector<NamedBody> RunConfig::bodies_for(int n) const {
  std::vector<NamedBody> out;
  for (std::size_t i = 0; i < bodies.size(); ++i)
    out.push_back({label_of(bodies[i], "body" + std::to_string(i)), parse_body(bodies[i], n)});
  return out;
}

std::vector<NamedDensity> RunConfig::densities_for(int n) const {
  std::vector<NamedDensity> out;
  for (std::size_t i = 0; i < densities.size(); ++i)
    out.push_back({label_of(densities[i], "density" + std::to_string(i)), parse_density(densities[i], n)});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> RunConfig::pairs_for(std::size_t body_count) const {
  if (pairs) return *pairs;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < body_count; ++i)
    for (std::size_t k = 0; k < body_count; ++k)
      if (i != k) out.emplace_back(i, k);
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  fail("format must be 'json' or 'csv', got '" + s + "'");
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) fail("config must be a JSON object");
  RunConfig c;
  if (!j.contains("dimension")) fail("missing field 'dimension'");
  const json& dim = j.at("dimension");
  if (dim.is_number_integer()) {
    c.dimensions = {dim.get<int>()};
  } else if (dim.is_array() && !dim.empty()) {
    for (const json& d : dim) {
      if (!d.is_number_integer()) fail("'dimension' entries must be integers");
      c.dimensions.push_back(d.get<int>());
    }
  } else {
    fail("'dimension' must be an integer or a non-empty array of integers");
  }
  for (int n : c.dimensions)
    if (n < 2 || n > 4) fail("dimension must be 2, 3 or 4, got " + std::to_string(n));

  if (j.contains("bodies")) {
    if (!j.at("bodies").is_array()) fail("'bodies' must be an array");
    c.bodies = j.at("bodies");
    c.has_bodies = true;
  }
  if (j.contains("densities")) {
    if (!j.at("densities").is_array()) fail("'densities' must be an array");
    c.densities = j.at("densities");
    c.has_densities = true;
  }
  // Instantiate everything once per dimension so schema errors surface here.
  for (int n : c.dimensions) {
    (void)c.bodies_for(n);
    (void)c.densities_for(n);
  }

  if (j.contains("pairs")) {
    const json& pairs = j.at("pairs");
    if (!pairs.is_array()) fail("'pairs' must be an array of [K, L] index pairs");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const json& p : pairs) {
      if (!p.is_array() || p.size() != 2 || !non_negative_integer(p[0]) || !non_negative_integer(p[1]))
        fail("each pair must be [K_index, L_index]");
      const auto k = p[0].get<std::size_t>(), l = p[1].get<std::size_t>();
      if (k >= c.bodies.size() || l >= c.bodies.size()) fail("pair index out of range");
      out.emplace_back(k, l);
    }
    c.pairs = std::move(out);
  }

  if (j.contains("directions")) {
    if (!j.at("directions").is_array()) fail("'directions' must be an array of vectors");
    for (const json& d : j.at("directions")) {
      json wrapper = {{"v", d}};
      c.directions.push_back(numbers(wrapper, "v"));
    }
  }

  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    if (!q.is_object()) fail("'quadrature' must be an object");
    c.spec.sphere_resolution = integer(q, "sphere_resolution", c.spec.sphere_resolution);
    c.spec.radial_nodes = integer(q, "radial_nodes", c.spec.radial_nodes);
    c.spec.refinement_factor = number_or(q, "refinement_factor", c.spec.refinement_factor);
  }
  wrap_invalid([&] {
    c.spec.validate();
    return 0;
  });

  c.search_resolution = integer(j, "search_resolution", c.search_resolution);
  if (c.search_resolution < 8) fail("search_resolution must be >= 8");
  if (j.contains("mc_samples")) {
    if (!non_negative_integer(j.at("mc_samples"))) fail("'mc_samples' must be a positive integer");
    c.mc_samples = j.at("mc_samples").get<std::uint64_t>();
    if (c.mc_samples < 10000) fail("mc_samples must be >= 10000");
  }
  if (j.contains("seed")) {
    if (!non_negative_integer(j.at("seed"))) fail("'seed' must be a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("output")) {
    if (!j.at("output").is_string()) fail("'output' must be a string");
    c.output_path = j.at("output").get<std::string>();
  }
  if (j.contains("format")) {
    if (!j.at("format").is_string()) fail("'format' must be a string");
    c.format = parse_format(j.at("format").get<std::string>());
  }
  if (j.contains("sweep")) {
    if (!j.at("sweep").is_array() || j.at("sweep").empty()) fail("'sweep' must be a non-empty array of names");
    c.sweep_commands.clear();
    for (const json& s : j.at("sweep")) {
      if (!s.is_string()) fail("'sweep' entries must be strings");
      c.sweep_commands.push_back(s.get<std::string>());
    }
  }
  c.lemma_samples = integer(j, "lemma_samples", c.lemma_samples);
  c.lemma_max_n = integer(j, "lemma_max_n", c.lemma_max_n);
  if (c.lemma_samples < 0 || c.lemma_max_n < 2) fail("lemma_samples must be >= 0 and lemma_max_n >= 2");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace hyperslice
