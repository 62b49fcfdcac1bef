// Config-driven verification runs and their reports.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tensorval/io.hpp"
#include "tensorval/polytope.hpp"

namespace tensorval {

/// Invalid configuration or body specification (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string name = "experiment";
  /// kinematic, crofton, mcmullen, steiner, coefficients, tensor-algebra or structural.
  std::string kind;
  int n = 2;
  std::vector<int> j{0};
  std::vector<int> k{1};
  std::vector<int> r{0};
  std::vector<int> s{0};
  /// mcmullen: all r + s <= rs_max.
  int rs_max = 5;
  /// coefficients: index ranges of the exact identity checks.
  int n_max = 5;
  int s_max = 6;
  int p_max = 3;
  /// Body specifications as given in the config file.
  Json bodies = Json::array();
  /// kinematic: index pairs into the expanded body list; empty pairs each body with itself.
  std::vector<std::pair<int, int>> pairs;
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  double zmax = 3.0;
  int workers = 0;
  int batch_size = 4096;
  double tolerance = 1e-9;
  std::vector<double> epsilon{1.0};
  bool symmetrize = false;
  /// Deliberate relative error in the closed-form coefficients (sensitivity checks only).
  double coefficient_perturbation = 0.0;
};

/// Throws ConfigError on unknown fields, wrong types or out-of-range values.
ExperimentConfig parse_config(const Json& j);
Json to_json(const ExperimentConfig& c);

struct NamedBody {
  std::string label;
  Polytope polytope;
};

Polytope unit_square();
Polytope unit_cube();
/// Hull of v points at uniform angles on the unit circle with radii jittered into [0.7, 1].
Polytope random_polygon(int vertices, std::uint64_t seed);
/// Hull of v uniform points on the unit sphere.
Polytope random_polytope(int vertices, std::uint64_t seed);
/// Expands the body specifications of a config. Throws ConfigError.
std::vector<NamedBody> resolve_bodies(const ExperimentConfig& c);

struct CaseRecord {
  std::string id;
  std::string body;
  Json indices = Json::object();
  /// Closed form (tensor JSON) or null.
  Json exact;
  /// Estimate JSON or null for exact identity checks.
  Json estimate;
  std::vector<double> z;
  double max_abs_z = 0.0;
  /// Largest normalized residual of an exact identity check.
  double residual = 0.0;
  double tolerance = 0.0;
  /// "exact" or "statistical".
  std::string exactness = "exact";
  bool pass = true;

  bool operator==(const CaseRecord&) const = default;
};

struct Report {
  std::string name;
  std::string kind;
  Json config;
  std::vector<CaseRecord> cases;
  int passed = 0;
  int failed = 0;
  double max_abs_z = 0.0;
  bool pass = true;

  bool operator==(const Report&) const = default;
};

Json to_json(const CaseRecord& c);
CaseRecord case_from_json(const Json& j);
Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Runs every case of the config. Writes one table line per case (with wall
/// time) to `table` when given; wall times never enter the report itself, and
/// the config echo omits the worker count.
Report run_experiment(const ExperimentConfig& c, std::ostream* table = nullptr);

struct PresetOptions {
  bool fail_fast = false;
  int workers = 0;
  double coefficient_perturbation = 0.0;
};

/// Configs of a named preset ("quick" or "full"). Throws ConfigError for other names.
std::vector<ExperimentConfig> preset_configs(const std::string& name);
/// Configs of one acceptance criterion (1..6).
std::vector<ExperimentConfig> criterion_configs(int criterion);

struct SuiteResult {
  std::string preset;
  std::vector<Report> reports;
  bool pass = true;
};
SuiteResult run_preset(const std::string& name, const PresetOptions& opt, std::ostream* table = nullptr);
Json to_json(const SuiteResult& s);

}  // namespace tensorval
