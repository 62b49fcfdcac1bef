#include "tensorval/harness.hpp"

namespace tensorval {

namespace {

Json generator(const std::string& gen, int vertices, std::uint64_t seed, int count) {
  return Json{{"generator", gen}, {"vertices", vertices}, {"seed", seed}, {"count", count}};
}

ExperimentConfig make(std::string name, std::string kind, int n) {
  ExperimentConfig c;
  c.name = std::move(name);
  c.kind = std::move(kind);
  c.n = n;
  return c;
}

std::vector<ExperimentConfig> coefficient_identities() {
  auto c = make("c1-coefficients", "coefficients", 2);
  c.n_max = 5;
  c.s_max = 6;
  c.p_max = 3;
  return {c};
}

std::vector<ExperimentConfig> mcmullen_suite() {
  auto polygons = make("c2-mcmullen-polygons", "mcmullen", 2);
  polygons.bodies = Json::array({generator("random-polygon", 8, 1000, 20)});
  polygons.rs_max = 5;
  auto solids = make("c2-mcmullen-polytopes", "mcmullen", 3);
  solids.bodies = Json::array({generator("random-polytope", 12, 2000, 10)});
  solids.rs_max = 5;
  return {polygons, solids};
}

std::vector<ExperimentConfig> structural_suite() {
  auto planar = make("c3-structural-2d", "structural", 2);
  planar.bodies = Json::array({"unit-square", generator("random-polygon", 8, 1000, 20)});
  planar.tolerance = 1e-10;
  auto solid = make("c3-structural-3d", "structural", 3);
  solid.bodies = Json::array({"unit-cube", generator("random-polytope", 12, 2000, 10)});
  solid.tolerance = 1e-10;
  return {planar, solid};
}

std::vector<ExperimentConfig> steiner_suite() {
  auto square = make("c4-steiner-square", "steiner", 2);
  square.bodies = Json::array({"unit-square"});
  square.epsilon = {1.0};
  square.samples = 1000000;
  square.seed = 401;
  auto cube = make("c4-steiner-cube", "steiner", 3);
  cube.bodies = Json::array({"unit-cube"});
  cube.epsilon = {0.5};
  cube.samples = 1000000;
  cube.seed = 402;
  return {square, cube};
}

std::vector<ExperimentConfig> crofton_suite() {
  const Json planar = Json::array({"unit-square", generator("random-polygon", 8, 5000, 2)});
  const Json solid = Json::array({"unit-cube", generator("random-polytope", 12, 5100, 2)});

  auto lines = make("c5-crofton-2d-k1-j0", "crofton", 2);
  lines.bodies = planar;
  lines.k = {1};
  lines.j = {0};
  lines.r = {0, 1};
  lines.s = {0, 2};
  lines.samples = 200000;
  lines.seed = 501;

  auto lines_equal = make("c5-crofton-2d-k1-j1", "crofton", 2);
  lines_equal.bodies = planar;
  lines_equal.k = {1};
  lines_equal.j = {1};
  lines_equal.r = {0, 1};
  lines_equal.s = {2};
  lines_equal.samples = 200000;
  lines_equal.seed = 502;

  auto planes = make("c5-crofton-3d-k2-j01", "crofton", 3);
  planes.bodies = solid;
  planes.k = {2};
  planes.j = {0, 1};
  planes.r = {0, 1};
  planes.s = {0, 1, 2};
  planes.samples = 100000;
  planes.seed = 503;

  auto axes = make("c5-crofton-3d-k1-j0", "crofton", 3);
  axes.bodies = solid;
  axes.k = {1};
  axes.j = {0};
  axes.r = {0, 1};
  axes.s = {0, 1, 2};
  axes.samples = 100000;
  axes.seed = 504;

  auto equal_lines = make("c5-crofton-3d-k1-j1", "crofton", 3);
  equal_lines.bodies = solid;
  equal_lines.k = {1};
  equal_lines.j = {1};
  equal_lines.r = {0, 1};
  equal_lines.s = {2};
  equal_lines.samples = 100000;
  equal_lines.seed = 505;

  auto equal_planes = make("c5-crofton-3d-k2-j2", "crofton", 3);
  equal_planes.bodies = solid;
  equal_planes.k = {2};
  equal_planes.j = {2};
  equal_planes.r = {0, 1};
  equal_planes.s = {2};
  equal_planes.samples = 100000;
  equal_planes.seed = 506;

  return {lines, lines_equal, planes, axes, equal_lines, equal_planes};
}

std::vector<ExperimentConfig> kinematic_suite() {
  auto planar = make("c6-kinematic-2d", "kinematic", 2);
  planar.bodies = Json::array({"unit-square", generator("random-polygon", 8, 6000, 4)});
  planar.pairs = {{0, 0}, {1, 2}, {3, 4}};
  planar.j = {0, 1};
  planar.r = {0, 1};
  planar.s = {0, 1, 2};
  planar.samples = 100000;
  planar.seed = 601;

  auto solid = make("c6-kinematic-3d", "kinematic", 3);
  solid.bodies = Json::array({"unit-cube", generator("random-polytope", 12, 6100, 2)});
  solid.pairs = {{0, 0}, {1, 2}};
  solid.j = {1, 2};
  solid.r = {0};
  solid.s = {0, 1, 2};
  solid.samples = 100000;
  solid.seed = 602;

  auto vertices = make("c6-kinematic-3d-j0", "kinematic", 3);
  vertices.bodies = Json::array({"unit-cube"});
  vertices.pairs = {{0, 0}};
  vertices.j = {0};
  vertices.r = {0};
  vertices.s = {0, 1, 2};
  vertices.samples = 100000;
  vertices.seed = 603;

  return {planar, solid, vertices};
}

std::vector<ExperimentConfig> quick() {
  std::vector<ExperimentConfig> out = coefficient_identities();

  auto algebra = make("quick-tensor-algebra", "tensor-algebra", 2);
  algebra.seed = 11;
  out.push_back(algebra);

  auto mcm2 = make("quick-mcmullen-2d", "mcmullen", 2);
  mcm2.bodies = Json::array({"unit-square", generator("random-polygon", 8, 1000, 3)});
  auto mcm3 = make("quick-mcmullen-3d", "mcmullen", 3);
  mcm3.bodies = Json::array({"unit-cube", generator("random-polytope", 12, 2000, 2)});
  out.push_back(mcm2);
  out.push_back(mcm3);

  auto st2 = make("quick-structural-2d", "structural", 2);
  st2.bodies = mcm2.bodies;
  st2.tolerance = 1e-10;
  auto st3 = make("quick-structural-3d", "structural", 3);
  st3.bodies = mcm3.bodies;
  st3.tolerance = 1e-10;
  out.push_back(st2);
  out.push_back(st3);

  auto kin = make("quick-kinematic-squares", "kinematic", 2);
  kin.bodies = Json::array({"unit-square"});
  kin.samples = 100000;
  kin.seed = 21;
  out.push_back(kin);

  auto crof = make("quick-crofton-square", "crofton", 2);
  crof.bodies = Json::array({"unit-square"});
  crof.k = {1};
  crof.samples = 100000;
  crof.seed = 22;
  out.push_back(crof);
  return out;
}

}  // namespace

std::vector<ExperimentConfig> criterion_configs(int criterion) {
  switch (criterion) {
    case 1: return coefficient_identities();
    case 2: return mcmullen_suite();
    case 3: return structural_suite();
    case 4: return steiner_suite();
    case 5: return crofton_suite();
    case 6: return kinematic_suite();
    default: throw ConfigError("no configs for criterion " + std::to_string(criterion));
  }
}

std::vector<ExperimentConfig> preset_configs(const std::string& name) {
  if (name == "quick") return quick();
  if (name == "full") {
    std::vector<ExperimentConfig> out;
    for (int c = 1; c <= 6; ++c) {
      auto part = criterion_configs(c);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw ConfigError("unknown preset \"" + name + "\" (expected quick or full)");
}

}  // namespace tensorval
