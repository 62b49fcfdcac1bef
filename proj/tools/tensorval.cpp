// Command-line driver: `run` executes one config, `validate` a named preset.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "tensorval/harness.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Writes the whole document or nothing.
void write_json(const std::string& path, const tensorval::Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_command(const std::string& config_path, const std::string& out_path, std::optional<std::uint64_t> seed,
                std::optional<std::int64_t> samples, std::optional<int> workers) {
  using namespace tensorval;
  ExperimentConfig cfg;
  try {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config " + config_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    if (seed) doc["seed"] = *seed;
    if (samples) doc["samples"] = *samples;
    if (workers) doc["workers"] = *workers;
    cfg = parse_config(doc);
    resolve_bodies(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "tensorval: " << e.what() << '\n';
    return kExitUsage;
  }
  const Report rep = run_experiment(cfg, &std::cout);
  std::cout << rep.passed << " passed, " << rep.failed << " failed, max |z| = " << rep.max_abs_z << '\n'
            << (rep.pass ? "PASS" : "FAIL") << '\n';
  if (!out_path.empty()) write_json(out_path, to_json(rep));
  return rep.pass ? 0 : kExitFail;
}

int validate_command(const std::string& preset, const std::string& out_path, const tensorval::PresetOptions& opt) {
  using namespace tensorval;
  try {
    preset_configs(preset);
  } catch (const ConfigError& e) {
    std::cerr << "tensorval: " << e.what() << '\n';
    return kExitUsage;
  }
  const SuiteResult res = run_preset(preset, opt, &std::cout);
  int passed = 0, failed = 0;
  for (const auto& r : res.reports) {
    passed += r.passed;
    failed += r.failed;
  }
  std::cout << preset << ": " << passed << " passed, " << failed << " failed\n" << (res.pass ? "PASS" : "FAIL") << '\n';
  if (!out_path.empty()) write_json(out_path, to_json(res));
  return res.pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski tensor integral-geometry verification"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
  std::optional<int> workers;
  auto* run = app.add_subcommand("run", "Run one experiment config");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--out", out_path, "Write the JSON report here");
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--samples", samples, "Override the sample count")->check(CLI::PositiveNumber);
  run->add_option("--workers", workers, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);

  std::string preset;
  tensorval::PresetOptions opt;
  auto* validate = app.add_subcommand("validate", "Run a preset suite");
  validate->add_option("--preset", preset, "quick or full")->required();
  validate->add_option("--out", out_path, "Write the JSON suite report here");
  validate->add_flag("--fail-fast", opt.fail_fast, "Stop after the first failing config");
  validate->add_option("--workers", opt.workers, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  validate->add_option("--perturb", opt.coefficient_perturbation,
                       "Relative error injected into the closed-form coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run) return run_command(config_path, out_path, seed, samples, workers);
    return validate_command(preset, out_path, opt);
  } catch (const std::exception& e) {
    std::cerr << "tensorval: " << e.what() << '\n';
    return kExitUsage;
  }
}
