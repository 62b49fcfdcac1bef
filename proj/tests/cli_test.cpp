#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(TENSORVAL_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tensorval_cli_test";
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

nlohmann::json read(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

const char* kMcMullen = R"j({"kind": "mcmullen", "n": 2, "bodies": ["unit-square", "random-polygon(7)"]})j";

}  // namespace

TEST(Cli, RunPassingConfigWritesReport) {
  const auto cfg = write("mcm.json", kMcMullen);
  const auto out = scratch("mcm_report.json");
  EXPECT_EQ(run("run --config " + cfg.string() + " --out " + out.string()), 0);
  const auto rep = read(out);
  EXPECT_EQ(rep["summary"]["verdict"], "PASS");
  EXPECT_EQ(rep["cases"].size(), 4u);
}

TEST(Cli, FlagsOverrideConfigFields) {
  const auto cfg = write("kin.json", R"({"kind": "kinematic", "n": 2, "bodies": ["unit-square"], "samples": 50})");
  const auto out = scratch("kin_report.json");
  EXPECT_EQ(run("run --config " + cfg.string() + " --out " + out.string() + " --seed 5 --samples 2000 --workers 2"), 0);
  const auto rep = read(out);
  EXPECT_EQ(rep["config"]["seed"], 5);
  EXPECT_EQ(rep["config"]["samples"], 2000);
  EXPECT_EQ(rep["cases"][0]["estimate"]["samples"], 2000);
}

TEST(Cli, FailingConfigExitsOne) {
  const auto cfg = write("bad_coeff.json", R"({"kind": "kinematic", "n": 2, "bodies": ["unit-square"],
      "samples": 100000, "seed": 3, "coefficientPerturbation": 0.05})");
  const auto out = scratch("bad_coeff_report.json");
  EXPECT_EQ(run("run --config " + cfg.string() + " --out " + out.string()), 1);
  EXPECT_EQ(read(out)["summary"]["verdict"], "FAIL");
}

TEST(Cli, MalformedJsonExitsTwoWithoutReport) {
  const auto cfg = write("broken.json", R"({"kind": "mcmullen", "n": 2,)");
  const auto out = scratch("broken_report.json");
  EXPECT_EQ(run("run --config " + cfg.string() + " --out " + out.string()), 2);
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, InvalidConfigsExitTwo) {
  const auto out = scratch("invalid_report.json");
  for (const char* text : {R"({"kind": "mcmullen", "n": 5, "bodies": ["unit-square"]})",
                           R"({"kind": "mcmullen", "n": 2, "bodies": ["unit-cube"]})",
                           R"({"kind": "kinematic", "n": 2, "bodies": ["unit-square"], "samples": 0})",
                           R"({"kind": "kinematic", "n": 2, "bodies": ["unit-square"], "colour": "red"})",
                           R"([1, 2, 3])"}) {
    const auto cfg = write("invalid.json", text);
    EXPECT_EQ(run("run --config " + cfg.string() + " --out " + out.string()), 2) << text;
    EXPECT_FALSE(fs::exists(out));
  }
  EXPECT_EQ(run("run --config /nonexistent/config.json"), 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("run"), 2);
  EXPECT_EQ(run("validate"), 2);
  EXPECT_EQ(run("validate --preset nightly"), 2);
  const auto cfg = write("mcm2.json", kMcMullen);
  EXPECT_EQ(run("run --config " + cfg.string() + " --samples -4"), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, QuickPresetPasses) {
  const auto out = scratch("quick.json");
  EXPECT_EQ(run("validate --preset quick --out " + out.string()), 0);
  EXPECT_EQ(read(out)["summary"]["verdict"], "PASS");
}

TEST(Cli, RepeatedRunIsByteIdentical) {
  const auto cfg = write("rep.json", R"({"kind": "crofton", "n": 3, "k": [2], "j": [0, 1], "s": [0, 2],
      "bodies": ["unit-cube"], "samples": 3000, "seed": 12})");
  const auto a = scratch("rep_a.json"), b = scratch("rep_b.json");
  EXPECT_EQ(run("run --config " + cfg.string() + " --out " + a.string() + " --workers 1"), 0);
  EXPECT_EQ(run("run --config " + cfg.string() + " --out " + b.string() + " --workers 1"), 0);
  std::ifstream fa(a), fb(b);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
}

TEST(Cli, FullPresetWithPerturbedCoefficientFails) {
  const auto out = scratch("full_perturbed.json");
  EXPECT_EQ(run("validate --preset full --perturb 0.05 --fail-fast --out " + out.string()), 1);
  const auto rep = read(out);
  EXPECT_EQ(rep["summary"]["verdict"], "FAIL");
  // Exact criteria are unaffected; the first statistical config that uses the coefficients fails.
  const auto& last = rep["reports"].back();
  EXPECT_EQ(last["name"], "c5-crofton-2d-k1-j0");
  for (std::size_t i = 0; i + 1 < rep["reports"].size(); ++i) EXPECT_EQ(rep["reports"][i]["summary"]["verdict"], "PASS");
}
