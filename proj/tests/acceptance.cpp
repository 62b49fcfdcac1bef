// Acceptance matrix: one PASS/FAIL line per criterion.
//
// Usage: acceptance [report.json]
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tensorval/harness.hpp"
#include "tensorval/mc.hpp"

using namespace tensorval;

namespace {

struct Criterion {
  int id;
  std::string title;
  // Budget per config, in seconds.
  double budget;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome run_criterion(const Criterion& c, Json& log) {
  Outcome out;
  int passed = 0, failed = 0;
  double max_z = 0.0, worst_residual = 0.0, slowest = 0.0;
  for (const auto& cfg : criterion_configs(c.id)) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report rep = run_experiment(cfg);
    const double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    passed += rep.passed;
    failed += rep.failed;
    max_z = std::max(max_z, rep.max_abs_z);
    for (const auto& rc : rep.cases) {
      if (rc.exactness == "exact") worst_residual = std::max(worst_residual, rc.residual);
      if (!rc.pass) {
        std::cout << "  failing case " << rc.id;
        if (rc.exactness == "statistical") std::cout << "  max|z| = " << rc.max_abs_z;
        else std::cout << "  residual = " << rc.residual << " (tol " << rc.tolerance << ")";
        std::cout << '\n';
      }
    }
    if (secs > c.budget) {
      out.pass = false;
      std::cout << "  config " << cfg.name << " took " << secs << " s (budget " << c.budget << " s)\n";
    }
    log.push_back(to_json(rep));
  }
  out.pass = out.pass && failed == 0;
  std::ostringstream d;
  d << passed << " passed, " << failed << " failed";
  if (max_z > 0) d << ", max|z| " << max_z;
  else d << ", worst residual " << worst_residual;
  d << ", slowest config " << slowest << " s";
  out.detail = d.str();
  return out;
}

// Byte-identical reports across worker counts, and stderr halving when N quadruples.
Outcome determinism_and_convergence(Json& log) {
  Outcome out;
  std::ostringstream d;

  std::vector<ExperimentConfig> configs = criterion_configs(5);
  configs.push_back(criterion_configs(6).front());
  int identical = 0;
  for (auto cfg : configs) {
    cfg.samples = 20000;
    std::string reference;
    for (int workers : {1, 2, 4}) {
      cfg.workers = workers;
      const std::string text = to_json(run_experiment(cfg)).dump();
      if (reference.empty()) {
        reference = text;
      } else if (text != reference) {
        out.pass = false;
        std::cout << "  report of " << cfg.name << " differs at " << workers << " workers\n";
      }
    }
    ++identical;
  }
  d << identical << " configs checked at 1/2/4 workers";

  Json ratios = Json::array();
  double lo = 1.0, hi = 0.0;
  for (const auto& cfg : criterion_configs(5)) {
    std::vector<Target> scalar;
    for (int k : cfg.k)
      for (int j : cfg.j)
        if (j < k) scalar.push_back({j, 0, 0});
    if (scalar.empty()) continue;
    for (const auto& body : resolve_bodies(cfg)) {
      McOptions opt;
      opt.seed = cfg.seed;
      opt.batch_size = cfg.batch_size;
      opt.samples = 100000;
      const int k = cfg.k.front();
      const auto small = estimate_crofton(body.polytope, k, scalar, opt);
      opt.samples = 400000;
      const auto large = estimate_crofton(body.polytope, k, scalar, opt);
      for (std::size_t i = 0; i < scalar.size(); ++i) {
        const double ratio = large[i].std_error.value() / small[i].std_error.value();
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        ratios.push_back({{"config", cfg.name}, {"body", body.label}, {"k", k}, {"j", scalar[i].j}, {"ratio", ratio}});
        if (ratio < 0.4 || ratio > 0.6) {
          out.pass = false;
          std::cout << "  stderr ratio " << ratio << " for " << cfg.name << " " << body.label << " j=" << scalar[i].j
                    << '\n';
        }
      }
    }
  }
  d << "; " << ratios.size() << " stderr ratios in [" << lo << ", " << hi << "]";
  log.push_back({{"name", "c7-stderr-ratios"}, {"ratios", ratios}});
  out.detail = d.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "coefficient identities (exact)", 1.0},
      {2, "McMullen identities, tol 1e-9", 30.0},
      {3, "structural identities, tol 1e-10", 10.0},
      {4, "Steiner parallel volume, zmax 3", 60.0},
      {5, "Crofton formulae, zmax 3", 300.0},
      {6, "kinematic formulae, zmax 3", 600.0},
  };
  Json log = Json::array();
  bool all = true;
  std::vector<std::string> lines;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = run_criterion(c, log);
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.detail
         << "; " << seconds_since(t0) << " s)";
    std::cout << line.str() << std::endl;
    lines.push_back(line.str());
    all = all && o.pass;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = determinism_and_convergence(log);
  std::ostringstream line;
  line << "criterion 7: " << (o.pass ? "PASS" : "FAIL") << "  determinism and convergence  (" << o.detail << "; "
       << seconds_since(t0) << " s)";
  std::cout << line.str() << std::endl;
  lines.push_back(line.str());
  all = all && o.pass;

  std::cout << "\nsummary\n";
  for (const auto& l : lines) std::cout << l << '\n';
  if (argc > 1) std::ofstream(argv[1]) << log.dump(2) << '\n';
  return all ? 0 : 1;
}
