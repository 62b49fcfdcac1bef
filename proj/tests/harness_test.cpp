#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tensorval/harness.hpp"
#include "tensorval/io.hpp"
#include "tensorval/valuations.hpp"

using namespace tensorval;

namespace {

Json base(const std::string& kind) {
  return Json{{"kind", kind}, {"n", 2}, {"bodies", Json::array({"unit-square"})}};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(SymTensorJson, RoundTrip) {
  SymTensor t(3, 2);
  for (int i = 0; i < t.size(); ++i) t.coefficients()[i] = 0.1 * i - 0.3;
  EXPECT_EQ(symtensor_from_json(to_json(t)), t);
  EXPECT_EQ(symtensor_from_json(Json::parse(to_json(t).dump())), t);
  EXPECT_THROW(symtensor_from_json(Json::array()), std::invalid_argument);
}

TEST(ExactScalarJson, SingleTermAndSum) {
  const Json a = to_json(ExactScalar(Rational(3, 4), 1));
  EXPECT_EQ(a["num"], "3");
  EXPECT_EQ(a["den"], "4");
  EXPECT_EQ(a["piHalfPow"], 1);
  const Json b = to_json(ExactScalar(1) + ExactScalar::pi());
  EXPECT_EQ(b["terms"].size(), 2u);
}

TEST(EstimateJson, RoundTripAndCsv) {
  Estimate e;
  e.mean = SymTensor::metric(2);
  e.std_error = SymTensor(2, 2);
  e.std_error.coefficients()[1] = 0.25;
  e.samples = 17;
  e.seed = 99;
  e.window_volume = 4.5;
  EXPECT_EQ(estimate_from_json(Json::parse(to_json(e).dump())), e);
  const std::string csv = estimate_to_csv(e, "q");
  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 1 + e.mean.size());
  EXPECT_EQ(csv.rfind("label,exponents,mean,stderr\n", 0), 0u);
  EXPECT_NE(csv.find("q,1 1,0,0.25"), std::string::npos);
}

TEST(PolytopeIo, JsonAndOff) {
  const Polytope c = unit_cube();
  EXPECT_EQ(polytope_from_json(to_json(c)).face_counts(), c.face_counts());
  std::istringstream off("OFF\n# unit square\n4 1 0\n0 0\n1 0\n1 1\n0 1\n4 0 1 2 3\n");
  const Polytope s = polytope_from_off(off);
  EXPECT_EQ(s.ambient_dim(), 2);
  EXPECT_NEAR(s.content(), 1.0, 1e-15);
  std::istringstream bad("OFF\n3 0 0\n0 0 0\n1 1\n");
  EXPECT_THROW(polytope_from_off(bad), std::invalid_argument);
  const auto path = temp_file("tensorval_tet.off", "OFF 4 4 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n");
  EXPECT_NEAR(load_polytope(path.string()).content(), 1.0 / 6, 1e-15);
}

TEST(ParseConfig, DefaultsAndEcho) {
  const ExperimentConfig c = parse_config(base("mcmullen"));
  EXPECT_EQ(c.kind, "mcmullen");
  EXPECT_EQ(c.samples, 100000);
  const ExperimentConfig again = parse_config(to_json(c));
  EXPECT_EQ(to_json(again), to_json(c));
}

TEST(ParseConfig, RejectsInvalidConfigs) {
  auto rejects = [](Json j) { EXPECT_THROW(parse_config(j), ConfigError) << j.dump(); };
  rejects(Json::array());
  rejects(Json{{"n", 2}});
  rejects(base("volume"));
  auto with = [](const char* key, Json value) {
    Json j = base("kinematic");
    j[key] = std::move(value);
    return j;
  };
  rejects(with("n", 4));
  rejects(with("r", Json::array({5})));
  rejects(with("s", Json::array({7})));
  rejects(with("j", Json::array({3})));
  rejects(with("samples", 0));
  rejects(with("samples", "many"));
  rejects(with("zmax", -1));
  rejects(with("epsilon", Json::array({0.0})));
  rejects(with("unknownField", 1));
  rejects(with("bodies", Json::array()));
  rejects(with("bodies", "unit-square"));
}

TEST(ResolveBodies, AllSpecificationForms) {
  const auto file = temp_file("tensorval_tri.json", R"({"dim": 2, "vertices": [[0,0],[2,0],[0,2]]})");
  Json j = base("mcmullen");
  j["bodies"] = Json::array({"unit-square", "random-polygon(6)",
                             Json{{"generator", "random-polygon"}, {"vertices", 5}, {"seed", 10}, {"count", 2}},
                             Json{{"file", file.string()}},
                             Json{{"dim", 2}, {"vertices", {{0, 0}, {1, 0}, {0, 3}}}, {"label", "tri"}}});
  const auto bodies = resolve_bodies(parse_config(j));
  ASSERT_EQ(bodies.size(), 6u);
  EXPECT_EQ(bodies[0].label, "unit-square");
  EXPECT_EQ(bodies[2].label, "random-polygon(5)@10");
  EXPECT_EQ(bodies[3].label, "random-polygon(5)@11");
  EXPECT_NEAR(bodies[4].polytope.content(), 2.0, 1e-14);
  EXPECT_EQ(bodies[5].label, "tri");
  // Derived seeds are stable.
  EXPECT_EQ(resolve_bodies(parse_config(j))[1].label, bodies[1].label);
}

TEST(ResolveBodies, RejectsBadBodies) {
  auto rejects = [](Json body, int n = 2) {
    Json j = base("mcmullen");
    j["n"] = n;
    j["bodies"] = Json::array({body});
    EXPECT_THROW(resolve_bodies(parse_config(j)), ConfigError) << body.dump();
  };
  rejects("unit-cube");
  rejects("unit-sphere");
  rejects("random-polytope(8)");
  rejects(Json{{"generator", "random-polygon"}, {"vertices", 2}});
  rejects(Json{{"file", "/nonexistent/body.off"}});
  rejects(Json{{"dim", 3}, {"vertices", {{0, 0, 0}, {1, 0, 0}}}});
  rejects(42);
  Json pairs = base("kinematic");
  pairs["pairs"] = Json::array({Json::array({0, 3})});
  EXPECT_THROW(resolve_bodies(parse_config(pairs)), ConfigError);
}

TEST(RandomBodies, GeneratorsAreReproducibleAndNondegenerate) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Polytope a = random_polygon(8, seed);
    EXPECT_EQ(a.dim(), 2);
    EXPECT_EQ(a.vertices(), random_polygon(8, seed).vertices());
    const Polytope b = random_polytope(12, seed);
    EXPECT_EQ(b.dim(), 3);
    EXPECT_GE(b.face_count(0), 4);
    EXPECT_EQ(b.vertices(), random_polytope(12, seed).vertices());
  }
}

TEST(RunExperiment, McMullenOnDefaultCorpus) {
  Json j = base("mcmullen");
  j["bodies"] = Json::array({"unit-square", "random-polygon(8)", "random-polygon(6)"});
  const Report r = run_experiment(parse_config(j));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.passed, 6);
  for (const auto& c : r.cases) EXPECT_LE(c.residual, c.tolerance);
}

TEST(RunExperiment, CroftonSquareLines) {
  Json j = base("crofton");
  j["k"] = {1};
  j["samples"] = 1000000;
  j["seed"] = 7;
  const Report r = run_experiment(parse_config(j));
  ASSERT_EQ(r.cases.size(), 1u);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.cases[0].exact[0][1].get<double>(), 4 / std::numbers::pi, 1e-14);
}

TEST(RunExperiment, SuiteVerdictFailsIffAnyCaseFails) {
  Json j = base("kinematic");
  j["samples"] = 100000;
  j["seed"] = 8;
  const Report good = run_experiment(parse_config(j));
  EXPECT_TRUE(good.pass);
  j["coefficientPerturbation"] = 0.05;
  const Report bad = run_experiment(parse_config(j));
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.failed, 1);
}

TEST(RunExperiment, ExactKindsPass) {
  for (const char* kind : {"coefficients", "tensor-algebra"}) {
    Json j{{"kind", kind}};
    EXPECT_TRUE(run_experiment(parse_config(j)).pass) << kind;
  }
  for (int n : {2, 3}) {
    Json j = base("structural");
    j["n"] = n;
    j["bodies"] = Json::array({n == 2 ? "random-polygon(7)" : "random-polytope(9)"});
    j["tolerance"] = 1e-10;
    EXPECT_TRUE(run_experiment(parse_config(j)).pass);
  }
}

TEST(RunExperiment, SteinerCase) {
  Json j = base("steiner");
  j["epsilon"] = {0.25, 1.0};
  j["samples"] = 200000;
  j["seed"] = 9;
  const Report r = run_experiment(parse_config(j));
  EXPECT_EQ(r.cases.size(), 2u);
  EXPECT_TRUE(r.pass);
}

TEST(ReportJson, RoundTripsAndIsIndependentOfWorkers) {
  Json j = base("kinematic");
  j["bodies"] = Json::array({"unit-square", "random-polygon(6)"});
  j["pairs"] = Json::array({Json::array({0, 1})});
  j["j"] = {0, 1};
  j["s"] = {0, 2};
  j["samples"] = 5000;
  j["batchSize"] = 700;
  j["workers"] = 1;
  const Report one = run_experiment(parse_config(j));
  EXPECT_EQ(report_from_json(Json::parse(to_json(one).dump())), one);
  j["workers"] = 3;
  const Report three = run_experiment(parse_config(j));
  EXPECT_FALSE(one.config.contains("workers"));
  EXPECT_EQ(to_json(three).dump(), to_json(one).dump());
}

TEST(Presets, KnownNamesOnly) {
  EXPECT_FALSE(preset_configs("quick").empty());
  EXPECT_FALSE(preset_configs("full").empty());
  EXPECT_THROW(preset_configs("nightly"), ConfigError);
  for (int c = 1; c <= 6; ++c)
    for (const auto& cfg : criterion_configs(c)) EXPECT_NO_THROW(resolve_bodies(cfg)) << cfg.name;
  EXPECT_THROW(criterion_configs(7), ConfigError);
}

TEST(Presets, QuickPasses) {
  const SuiteResult r = run_preset("quick", {});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(to_json(r)["summary"]["verdict"], "PASS");
}
