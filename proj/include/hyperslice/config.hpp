#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hyperslice/bodies.hpp"
#include "hyperslice/densities.hpp"
#include "hyperslice/quadrature.hpp"

namespace hyperslice {

/// Malformed or inconsistent configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise unusable numerical result (CLI exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv };

struct NamedBody {
  std::string label;
  Body body;
};

struct NamedDensity {
  std::string label;
  Density density;
};

/// Parsed run configuration. Body and density descriptors are kept as JSON
/// and instantiated per dimension, so one sweep can cover several n.
struct RunConfig {
  std::vector<int> dimensions;
  nlohmann::json bodies = nlohmann::json::array();
  nlohmann::json densities = nlohmann::json::array();
  bool has_bodies = false;
  bool has_densities = false;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  std::vector<std::vector<double>> directions;
  QuadratureSpec spec;
  int search_resolution = 128;
  std::uint64_t mc_samples = 1000000;
  std::uint64_t seed = 0;
  std::string output_path;
  OutputFormat format = OutputFormat::json;
  std::vector<std::string> sweep_commands{"hyperplane"};
  int lemma_samples = 1000;
  int lemma_max_n = 50;

  std::vector<NamedBody> bodies_for(int n) const;
  std::vector<NamedDensity> densities_for(int n) const;
  /// Explicit pairs, or every ordered pair (i, j), i != j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs_for(std::size_t body_count) const;
};

Body parse_body(const nlohmann::json& j, int n);
Density parse_density(const nlohmann::json& j, int n);

/// Throws ConfigError with a readable message on any schema violation.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

OutputFormat parse_format(const std::string& s);

}  // namespace hyperslice
