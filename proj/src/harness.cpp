#include "tensorval/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <regex>
#include <set>

#include "tensorval/coefficients.hpp"
#include "tensorval/mc.hpp"
#include "tensorval/rhs.hpp"
#include "tensorval/sphere_moments.hpp"
#include "tensorval/valuations.hpp"

namespace tensorval {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::set<std::string> kKinds{"kinematic", "crofton",        "mcmullen",  "steiner",
                                   "coefficients", "tensor-algebra", "structural"};

template <typename T>
T field(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(std::string("config field \"") + key + "\" has the wrong type");
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

void check_list(const std::vector<int>& v, int lo, int hi, const char* name) {
  require(!v.empty(), std::string("index list \"") + name + "\" is empty");
  for (int x : v)
    require(x >= lo && x <= hi, std::string("index \"") + name + "\" out of range [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
}

double max_abs_diff(const SymTensor& a, const SymTensor& b) { return (a - b).max_abs(); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

class Runner {
 public:
  Runner(const ExperimentConfig& c, std::ostream* table) : cfg_(c), table_(table) {
    report_.name = c.name;
    report_.kind = c.kind;
    report_.config = to_json(c);
    report_.config.erase("workers");
  }

  Report run() {
    if (cfg_.kind == "coefficients") {
      coefficient_cases();
    } else if (cfg_.kind == "tensor-algebra") {
      tensor_algebra_cases();
    } else {
      bodies_ = resolve_bodies(cfg_);
      if (cfg_.kind == "kinematic") kinematic_cases();
      if (cfg_.kind == "crofton") crofton_cases();
      if (cfg_.kind == "mcmullen") mcmullen_cases();
      if (cfg_.kind == "structural") structural_cases();
      if (cfg_.kind == "steiner") steiner_cases();
    }
    for (const auto& c : report_.cases) {
      (c.pass ? report_.passed : report_.failed) += 1;
      report_.max_abs_z = std::max(report_.max_abs_z, c.max_abs_z);
    }
    report_.pass = report_.failed == 0;
    return report_;
  }

 private:
  using Clock = std::chrono::steady_clock;

  McOptions mc_options() const {
    McOptions o;
    o.samples = cfg_.samples;
    o.seed = cfg_.seed;
    o.workers = cfg_.workers;
    o.batch_size = cfg_.batch_size;
    o.symmetrize = cfg_.symmetrize;
    return o;
  }

  void add(CaseRecord rec, double seconds) {
    if (table_) {
      *table_ << (rec.pass ? "PASS  " : "FAIL  ") << rec.id;
      if (rec.exactness == "statistical")
        *table_ << "  max|z|=" << fmt(rec.max_abs_z);
      else
        *table_ << "  residual=" << fmt(rec.residual) << " (tol " << fmt(rec.tolerance) << ")";
      *table_ << "  [" << fmt(seconds) << " s]\n";
      table_->flush();
    }
    report_.cases.push_back(std::move(rec));
  }

  static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  CaseRecord statistical(std::string id, std::string body, Json indices, const SymTensor& exact,
                         const Estimate& est) const {
    const Comparison cmp = compare(est, exact, cfg_.zmax);
    CaseRecord rec;
    rec.id = std::move(id);
    rec.body = std::move(body);
    rec.indices = std::move(indices);
    rec.exact = to_json(exact);
    rec.estimate = to_json(est);
    rec.z = cmp.z;
    rec.max_abs_z = cmp.max_abs_z;
    rec.tolerance = cfg_.zmax;
    rec.exactness = "statistical";
    rec.pass = cmp.pass;
    return rec;
  }

  CaseRecord identity(std::string id, std::string body, Json indices, double residual, double tol) const {
    CaseRecord rec;
    rec.id = std::move(id);
    rec.body = std::move(body);
    rec.indices = std::move(indices);
    rec.residual = residual;
    rec.tolerance = tol;
    rec.pass = residual <= tol;
    return rec;
  }

  std::string prefix() const { return cfg_.name + "/"; }

  void kinematic_cases() {
    std::vector<std::pair<int, int>> pairs = cfg_.pairs;
    if (pairs.empty())
      for (int i = 0; i < static_cast<int>(bodies_.size()); ++i) pairs.emplace_back(i, i);
    const RhsOptions rhs_opt{cfg_.coefficient_perturbation};
    for (const auto& [a, b] : pairs) {
      const auto& A = bodies_[a];
      const auto& B = bodies_[b];
      std::vector<Target> targets;
      for (int j : cfg_.j)
        for (int r : cfg_.r)
          for (int s : cfg_.s)
            if (j < cfg_.n || s == 0) targets.push_back({j, r, s});
      const auto t0 = Clock::now();
      const auto est = estimate_kinematic(A.polytope, B.polytope, targets, mc_options());
      const double per_case = seconds_since(t0) / targets.size();
      const std::string body = A.label + "|" + B.label;
      for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& t = targets[i];
        const SymTensor exact = rhs_kinematic(A.polytope, B.polytope, t.j, t.r, t.s, rhs_opt);
        add(statistical(prefix() + body + "/j=" + std::to_string(t.j) + ",r=" + std::to_string(t.r) +
                            ",s=" + std::to_string(t.s),
                        body, Json{{"j", t.j}, {"r", t.r}, {"s", t.s}}, exact, est[i]),
            per_case);
      }
    }
  }

  void crofton_cases() {
    const RhsOptions rhs_opt{cfg_.coefficient_perturbation};
    for (const auto& body : bodies_) {
      for (int k : cfg_.k) {
        std::vector<Target> targets;
        for (int j : cfg_.j)
          for (int r : cfg_.r)
            for (int s : cfg_.s)
              if (j <= k) targets.push_back({j, r, s});
        if (targets.empty()) continue;
        const auto t0 = Clock::now();
        const auto est = estimate_crofton(body.polytope, k, targets, mc_options());
        const double per_case = seconds_since(t0) / targets.size();
        for (std::size_t i = 0; i < targets.size(); ++i) {
          const auto& t = targets[i];
          const SymTensor exact = rhs_crofton(body.polytope, k, t.j, t.r, t.s, rhs_opt);
          add(statistical(prefix() + body.label + "/k=" + std::to_string(k) + ",j=" + std::to_string(t.j) +
                              ",r=" + std::to_string(t.r) + ",s=" + std::to_string(t.s),
                          body.label, Json{{"k", k}, {"j", t.j}, {"r", t.r}, {"s", t.s}}, exact, est[i]),
              per_case);
        }
      }
    }
  }

  void mcmullen_cases() {
    const int n = cfg_.n;
    for (const auto& body : bodies_) {
      const Polytope& P = body.polytope;
      auto t0 = Clock::now();
      double worst = 0.0;
      Json at = Json::object();
      for (int k = 0; k <= n; ++k) {
        for (int r = 0; r <= cfg_.rs_max; ++r) {
          for (int s = 0; r + s <= cfg_.rs_max; ++s) {
            const SymTensor res = mcmullen_residual(P, k, r, s);
            const double lhs = kTwoPi * s * minkowski_tensor(P, k, r, s).value.max_abs();
            const double ratio = res.max_abs() / (1.0 + lhs);
            if (ratio >= worst) {
              worst = ratio;
              at = Json{{"k", k}, {"r", r}, {"s", s}};
            }
          }
        }
      }
      add(identity(prefix() + body.label + "/lemma", body.label, at, worst, cfg_.tolerance), seconds_since(t0));

      t0 = Clock::now();
      worst = 0.0;
      at = Json::object();
      for (int k = 1; k <= n - 1; ++k) {
        for (int r = 0; r <= cfg_.rs_max; ++r) {
          for (int s = 2; r + s - 2 <= cfg_.rs_max; ++s) {
            const SymTensor lhs = expand_gen_tcm(P, k, r, s);
            SymTensor rhs = gen_tcm_total(P, k, r, s - 2).value;
            rhs *= k / kTwoPi;
            const double ratio = max_abs_diff(lhs, rhs) / (1.0 + lhs.max_abs());
            if (ratio >= worst) {
              worst = ratio;
              at = Json{{"k", k}, {"r", r}, {"s", s}};
            }
          }
        }
      }
      add(identity(prefix() + body.label + "/gen-tcm-expansion", body.label, at, worst, cfg_.tolerance),
          seconds_since(t0));
    }
  }

  void structural_cases() {
    const int n = cfg_.n;
    const double tol = cfg_.tolerance;
    const double c02 = (coeff::sphere_constants(n).omega /
                        (ExactScalar(Rational(2 * n)) * coeff::sphere_constants(n + 2).omega))
                           .to_double();
    const double omega_n = coeff::sphere_constants(n).omega.to_double();
    for (const auto& body : bodies_) {
      const Polytope& P = body.polytope;
      auto t0 = Clock::now();
      double worst = 0.0;
      for (int k = 0; k <= n; ++k) worst = std::max(worst, minkowski_tensor(P, k, 0, 1).value.max_abs());
      add(identity(prefix() + body.label + "/phi-0-1-vanishes", body.label, Json::object(), worst, tol),
          seconds_since(t0));
      if (P.dim() != n) continue;

      t0 = Clock::now();
      SymTensor expect = SymTensor::metric(n);
      expect *= c02;
      add(identity(prefix() + body.label + "/phi0-0-2-metric", body.label, Json::object(),
                   max_abs_diff(minkowski_tensor(P, 0, 0, 2).value, expect), tol),
          seconds_since(t0));

      t0 = Clock::now();
      double total = 0.0;
      for (int v = 0; v < P.face_count(0); ++v) total += sphere::cone_moment(P.normal_cone(0, v), 0, n).value();
      add(identity(prefix() + body.label + "/vertex-cone-tiling", body.label, Json::object(),
                   std::abs(total - omega_n), tol),
          seconds_since(t0));
    }
  }

  void steiner_cases() {
    for (const auto& body : bodies_) {
      for (double eps : cfg_.epsilon) {
        const auto t0 = Clock::now();
        const Estimate est = estimate_parallel_volume(body.polytope, eps, mc_options());
        const SymTensor exact = SymTensor::scalar(cfg_.n, steiner_polynomial(body.polytope, eps));
        add(statistical(prefix() + body.label + "/eps=" + fmt(eps), body.label, Json{{"epsilon", eps}}, exact,
                        est),
            seconds_since(t0));
      }
    }
  }

  // Exact identities among the coefficients; residual = number of violations.
  void coefficient_cases() {
    struct Family {
      std::string name;
      long checks = 0;
      long failures = 0;
      Json first_failure;
    };
    std::vector<Family> fam;
    for (const char* name : {"e-diagonal", "c-i1-m0-vanishes", "c-diagonal", "e-s0-p-vanishes", "e-top-closed-form",
                             "reconstruct-e-p0", "reconstruct-e-p"})
      fam.push_back(Family{name, 0, 0, Json()});
    auto check = [](Family& f, bool ok, Json where) {
      ++f.checks;
      if (!ok) {
        if (f.failures == 0) f.first_failure = std::move(where);
        ++f.failures;
      }
    };
    const auto t0 = Clock::now();
    const ExactScalar two_pi(Rational(2), 2);
    for (int n = 1; n <= cfg_.n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= k; ++j) {
          for (int s = 0; s <= cfg_.s_max; ++s) {
            const int big_m = s / 2;
            for (int m = 0; m <= big_m; ++m) {
              const Json where{{"n", n}, {"j", j}, {"k", k}, {"s", s}, {"m", m}};
              try {
                if (k == j) {
                  check(fam[0], coeff::kf_coeff_e(n, j, j, s, m, 0) == ExactScalar(m == 0 ? 1 : 0), where);
                  for (int i = 0; i <= 1; ++i)
                    check(fam[2], coeff::tcm_coeff_c(n, j, j, s, i, m) == ExactScalar(m == 0 && i == 0 ? 1 : 0),
                          where);
                }
                if (m == 0) check(fam[1], coeff::tcm_coeff_c(n, j, k, s, 1, 0).is_zero(), where);
                if (s == 0)
                  for (int p = 1; p <= cfg_.p_max; ++p) check(fam[3], coeff::kf_coeff_e(n, j, k, 0, 0, p).is_zero(), where);
                if (k == n && s % 2 == 0 && m == big_m)
                  check(fam[4], coeff::kf_coeff_e(n, j, n, s, m, 0) == top_closed_form(n, j, s), where);
                if (k >= 1) {
                  const ExactScalar c0 = coeff::tcm_coeff_c(n, j, k, s, 0, m);
                  const ExactScalar c1 = coeff::tcm_coeff_c(n, j, k, s, 1, m);
                  const ExactScalar c1_next = m + 1 <= big_m ? coeff::tcm_coeff_c(n, j, k, s, 1, m + 1) : ExactScalar();
                  const ExactScalar over_k(Rational(1, k));
                  const ExactScalar e0 = c0 + two_pi * over_k * c1 -
                                         two_pi * two_pi * over_k * ExactScalar(Rational(s - 2 * m)) * c1_next;
                  check(fam[5], coeff::kf_coeff_e(n, j, k, s, m, 0) == e0, where);
                  for (int p = 1; p <= cfg_.p_max; ++p) {
                    const ExactScalar ep =
                        m < big_m ? two_pi * over_k * (c1 - two_pi * ExactScalar(Rational(s - 2 * m + p)) * c1_next)
                                  : two_pi * over_k * c1;
                    Json wp = where;
                    wp["p"] = p;
                    check(fam[6], coeff::kf_coeff_e(n, j, k, s, m, p) == ep, wp);
                  }
                }
              } catch (const std::exception&) {
                check(fam[0], false, where);
              }
            }
          }
        }
      }
    }
    const double seconds = seconds_since(t0) / fam.size();
    for (auto& f : fam) {
      CaseRecord rec = identity(prefix() + f.name, "", Json{{"checks", f.checks}}, static_cast<double>(f.failures), 0.0);
      if (f.failures) rec.indices["firstFailure"] = f.first_failure;
      add(std::move(rec), seconds);
    }
  }

  // 1/((2 sqrt(pi))^s (s/2)!) Gamma(n/2)/Gamma((n+s)/2) Gamma((n-j+s)/2)/Gamma((n-j)/2), s even.
  static ExactScalar top_closed_form(int n, int j, int s) {
    const int h = s / 2;
    const ExactScalar lead = ExactScalar(Rational(1) / (Rational(BigInt(1) << s) * factorial(h)), -s);
    ExactScalar ratio = ExactScalar(1);
    // Gamma(n/2)/Gamma(n/2 + h) = 1 / prod_{i<h} (n/2 + i)
    for (int i = 0; i < h; ++i) ratio = ratio / ExactScalar(Rational(n + 2 * i, 2));
    // Gamma((n-j)/2 + h)/Gamma((n-j)/2) = prod_{i<h} ((n-j)/2 + i), which is 1{h = 0} when n = j.
    for (int i = 0; i < h; ++i) ratio = ratio * ExactScalar(Rational(n - j + 2 * i, 2));
    return lead * ratio;
  }

  void tensor_algebra_cases() {
    Rng rng(cfg_.seed, 0);
    auto random_tensor = [&](int dim, int rank) {
      SymTensor t(dim, rank);
      for (auto& c : t.coefficients()) c = rng.uniform(-1.0, 1.0);
      return t;
    };
    auto random_vec = [&](int dim) {
      std::vector<double> v(dim);
      for (auto& x : v) x = rng.uniform(-1.0, 1.0);
      return v;
    };
    const double tol = cfg_.tolerance;
    const auto t0 = Clock::now();
    double comm = 0.0, assoc = 0.0, power = 0.0, metric = 0.0, symmetry = 0.0, pull = 0.0;
    for (int dim = 1; dim <= 4; ++dim) {
      for (int trial = 0; trial < 5; ++trial) {
        const SymTensor a = random_tensor(dim, 2), b = random_tensor(dim, 3), c = random_tensor(dim, 1);
        comm = std::max(comm, max_abs_diff(sym_product(a, b), sym_product(b, a)));
        assoc = std::max(assoc, max_abs_diff(sym_product(sym_product(a, b), c), sym_product(a, sym_product(b, c))));

        const auto v = random_vec(dim);
        std::vector<std::vector<double>> args{random_vec(dim), random_vec(dim), random_vec(dim)};
        double expect = 1.0;
        for (const auto& w : args) {
          double dot = 0.0;
          for (int i = 0; i < dim; ++i) dot += v[i] * w[i];
          expect *= dot;
        }
        power = std::max(power, std::abs(tensorval::apply(tensor_power(v, 3), args) - expect));

        std::vector<std::vector<double>> basis;
        for (int i = 0; i < dim; ++i) {
          std::vector<double> e(dim, 0.0);
          e[i] = 1.0;
          basis.push_back(e);
        }
        metric = std::max(metric, max_abs_diff(metric_of_subspace(dim, basis), SymTensor::metric(dim)));

        std::vector<int> idx{0, dim - 1, dim / 2};
        std::vector<int> perm{dim / 2, 0, dim - 1};
        symmetry = std::max(symmetry, std::abs(b.component(idx) - b.component(perm)));

        std::vector<std::vector<double>> frame{random_vec(dim), random_vec(dim)};
        const SymTensor local = random_tensor(2, 3);
        const SymTensor back = pullback(local, frame, dim);
        const auto x = random_vec(dim);
        std::vector<double> y(2, 0.0);
        for (int f = 0; f < 2; ++f)
          for (int i = 0; i < dim; ++i) y[f] += frame[f][i] * x[i];
        pull = std::max(pull, std::abs(back.evaluate(x) - local.evaluate(y)));
      }
    }
    const double seconds = seconds_since(t0) / 6;
    add(identity(prefix() + "product-commutes", "", Json::object(), comm, tol), seconds);
    add(identity(prefix() + "product-associates", "", Json::object(), assoc, tol), seconds);
    add(identity(prefix() + "power-apply", "", Json::object(), power, tol), seconds);
    add(identity(prefix() + "full-metric", "", Json::object(), metric, tol), seconds);
    add(identity(prefix() + "component-symmetry", "", Json::object(), symmetry, tol), seconds);
    add(identity(prefix() + "pullback-evaluate", "", Json::object(), pull, tol), seconds);
  }

  const ExperimentConfig& cfg_;
  std::ostream* table_;
  std::vector<NamedBody> bodies_;
  Report report_;
};

Polytope generated(const std::string& gen, int vertices, std::uint64_t seed, int n) {
  if (gen == "random-polygon") {
    require(n == 2, "random-polygon needs n = 2");
    require(vertices >= 3, "random-polygon needs at least 3 vertices");
    return random_polygon(vertices, seed);
  }
  if (gen == "random-polytope") {
    require(n == 3, "random-polytope needs n = 3");
    require(vertices >= 4, "random-polytope needs at least 4 vertices");
    return random_polytope(vertices, seed);
  }
  throw ConfigError("unknown body generator \"" + gen + "\"");
}

}  // namespace

ExperimentConfig parse_config(const Json& j) {
  static const std::set<std::string> known{"name",   "kind",     "n",       "j",         "k",
                                           "r",      "s",        "rsMax",   "nMax",      "sMax",
                                           "pMax",   "bodies",   "pairs",   "samples",   "seed",
                                           "zmax",   "workers",  "batchSize", "tolerance", "epsilon",
                                           "symmetrize", "coefficientPerturbation"};
  require(j.is_object(), "config must be a JSON object");
  for (const auto& [key, _] : j.items()) require(known.count(key) == 1, "unknown config field \"" + key + "\"");
  ExperimentConfig c;
  c.name = field<std::string>(j, "name", c.name);
  c.kind = field<std::string>(j, "kind", "");
  require(kKinds.count(c.kind) == 1, "config field \"kind\" must be one of kinematic, crofton, mcmullen, steiner, "
                                     "coefficients, tensor-algebra, structural");
  c.n = field<int>(j, "n", c.n);
  require(c.n == 2 || c.n == 3, "n must be 2 or 3");
  c.j = field<std::vector<int>>(j, "j", c.j);
  c.k = field<std::vector<int>>(j, "k", c.k);
  c.r = field<std::vector<int>>(j, "r", c.r);
  c.s = field<std::vector<int>>(j, "s", c.s);
  check_list(c.j, 0, c.n, "j");
  check_list(c.k, 0, c.n, "k");
  check_list(c.r, 0, 4, "r");
  check_list(c.s, 0, 6, "s");
  c.rs_max = field<int>(j, "rsMax", c.rs_max);
  require(c.rs_max >= 0 && c.rs_max <= kUpsilonRankCap, "rsMax out of range");
  c.n_max = field<int>(j, "nMax", c.n_max);
  c.s_max = field<int>(j, "sMax", c.s_max);
  c.p_max = field<int>(j, "pMax", c.p_max);
  require(c.n_max >= 1 && c.n_max <= 12, "nMax out of range");
  require(c.s_max >= 0 && c.s_max <= 12, "sMax out of range");
  require(c.p_max >= 0 && c.p_max <= 8, "pMax out of range");
  if (j.contains("bodies")) {
    require(j.at("bodies").is_array(), "config field \"bodies\" must be a list");
    c.bodies = j.at("bodies");
  }
  c.pairs = field<std::vector<std::pair<int, int>>>(j, "pairs", {});
  c.samples = field<std::int64_t>(j, "samples", c.samples);
  require(c.samples >= 1, "samples must be at least 1");
  c.seed = field<std::uint64_t>(j, "seed", c.seed);
  c.zmax = field<double>(j, "zmax", c.zmax);
  require(c.zmax > 0.0, "zmax must be positive");
  c.workers = field<int>(j, "workers", c.workers);
  require(c.workers >= 0, "workers must be nonnegative");
  c.batch_size = field<int>(j, "batchSize", c.batch_size);
  require(c.batch_size >= 1, "batchSize must be positive");
  c.tolerance = field<double>(j, "tolerance", c.tolerance);
  require(c.tolerance >= 0.0, "tolerance must be nonnegative");
  c.epsilon = field<std::vector<double>>(j, "epsilon", c.epsilon);
  for (double e : c.epsilon) require(e > 0.0, "epsilon values must be positive");
  c.symmetrize = field<bool>(j, "symmetrize", c.symmetrize);
  c.coefficient_perturbation = field<double>(j, "coefficientPerturbation", c.coefficient_perturbation);
  require(std::isfinite(c.coefficient_perturbation), "coefficientPerturbation must be finite");
  const bool needs_bodies = c.kind != "coefficients" && c.kind != "tensor-algebra";
  require(!needs_bodies || !c.bodies.empty(), "config kind \"" + c.kind + "\" needs at least one body");
  return c;
}

Json to_json(const ExperimentConfig& c) {
  Json pairs = Json::array();
  for (const auto& [a, b] : c.pairs) pairs.push_back({a, b});
  return Json{{"name", c.name},
              {"kind", c.kind},
              {"n", c.n},
              {"j", c.j},
              {"k", c.k},
              {"r", c.r},
              {"s", c.s},
              {"rsMax", c.rs_max},
              {"nMax", c.n_max},
              {"sMax", c.s_max},
              {"pMax", c.p_max},
              {"bodies", c.bodies},
              {"pairs", pairs},
              {"samples", c.samples},
              {"seed", c.seed},
              {"zmax", c.zmax},
              {"workers", c.workers},
              {"batchSize", c.batch_size},
              {"tolerance", c.tolerance},
              {"epsilon", c.epsilon},
              {"symmetrize", c.symmetrize},
              {"coefficientPerturbation", c.coefficient_perturbation}};
}

Polytope unit_square() {
  const std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  return Polytope::from_points(2, std::span<const Vec3>(v));
}

Polytope unit_cube() {
  std::vector<Vec3> v;
  for (int i = 0; i < 8; ++i) v.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  return Polytope::from_points(3, std::span<const Vec3>(v));
}

Polytope random_polygon(int vertices, std::uint64_t seed) {
  Rng rng(seed, 0);
  std::vector<Vec3> pts;
  for (int i = 0; i < vertices; ++i) {
    const double phi = kTwoPi * rng.uniform();
    const double rad = 0.7 + 0.3 * rng.uniform();
    pts.emplace_back(rad * std::cos(phi), rad * std::sin(phi), 0.0);
  }
  return Polytope::from_points(2, std::span<const Vec3>(pts));
}

Polytope random_polytope(int vertices, std::uint64_t seed) {
  Rng rng(seed, 0);
  std::vector<Vec3> pts;
  for (int i = 0; i < vertices; ++i) {
    const double z = 2.0 * rng.uniform() - 1.0;
    const double phi = kTwoPi * rng.uniform();
    const double rho = std::sqrt(1.0 - z * z);
    pts.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return Polytope::from_points(3, std::span<const Vec3>(pts));
}

std::vector<NamedBody> resolve_bodies(const ExperimentConfig& c) {
  std::vector<NamedBody> out;
  static const std::regex call(R"((random-polygon|random-polytope)\((\d+)\))");
  for (std::size_t idx = 0; idx < c.bodies.size(); ++idx) {
    const Json& spec = c.bodies[idx];
    std::uint64_t state = c.seed ^ (0x5851f42d4c957f2dULL * (idx + 1));
    const std::uint64_t derived_seed = splitmix64(state);
    try {
      if (spec.is_string()) {
        const auto name = spec.get<std::string>();
        std::smatch m;
        if (name == "unit-square") {
          require(c.n == 2, "unit-square needs n = 2");
          out.push_back({name, unit_square()});
        } else if (name == "unit-cube") {
          require(c.n == 3, "unit-cube needs n = 3");
          out.push_back({name, unit_cube()});
        } else if (std::regex_match(name, m, call)) {
          const int v = std::stoi(m[2].str());
          out.push_back({name + "@" + std::to_string(derived_seed), generated(m[1].str(), v, derived_seed, c.n)});
        } else {
          throw ConfigError("unknown body \"" + name + "\"");
        }
      } else if (spec.is_object() && spec.contains("generator")) {
        const auto gen = spec.at("generator").get<std::string>();
        const int v = spec.at("vertices").get<int>();
        const std::uint64_t seed = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : derived_seed;
        const int count = spec.contains("count") ? spec.at("count").get<int>() : 1;
        require(count >= 1, "generator count must be positive");
        for (int i = 0; i < count; ++i)
          out.push_back({gen + "(" + std::to_string(v) + ")@" + std::to_string(seed + i),
                         generated(gen, v, seed + i, c.n)});
      } else if (spec.is_object() && spec.contains("file")) {
        const auto path = spec.at("file").get<std::string>();
        out.push_back({path, load_polytope(path)});
      } else if (spec.is_object() && spec.contains("vertices")) {
        const std::string label = spec.contains("label") ? spec.at("label").get<std::string>()
                                                         : "inline-" + std::to_string(idx);
        out.push_back({label, polytope_from_json(spec)});
      } else {
        throw ConfigError("body " + std::to_string(idx) + " is not a recognized specification");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("body " + std::to_string(idx) + ": " + e.what());
    }
    require(out.back().polytope.ambient_dim() == c.n,
            "body " + std::to_string(idx) + " does not live in R^" + std::to_string(c.n));
  }
  for (const auto& [a, b] : c.pairs)
    require(a >= 0 && b >= 0 && a < static_cast<int>(out.size()) && b < static_cast<int>(out.size()),
            "pair index out of range");
  return out;
}

Json to_json(const CaseRecord& c) {
  return Json{{"id", c.id},
              {"body", c.body},
              {"indices", c.indices},
              {"exact", c.exact},
              {"estimate", c.estimate},
              {"z", c.z},
              {"maxAbsZ", c.max_abs_z},
              {"residual", c.residual},
              {"tolerance", c.tolerance},
              {"exactness", c.exactness},
              {"verdict", c.pass ? "PASS" : "FAIL"}};
}

CaseRecord case_from_json(const Json& j) {
  CaseRecord c;
  c.id = j.at("id").get<std::string>();
  c.body = j.at("body").get<std::string>();
  c.indices = j.at("indices");
  c.exact = j.at("exact");
  c.estimate = j.at("estimate");
  c.z = j.at("z").get<std::vector<double>>();
  c.max_abs_z = j.at("maxAbsZ").get<double>();
  c.residual = j.at("residual").get<double>();
  c.tolerance = j.at("tolerance").get<double>();
  c.exactness = j.at("exactness").get<std::string>();
  c.pass = j.at("verdict").get<std::string>() == "PASS";
  return c;
}

Json to_json(const Report& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return Json{{"name", r.name},
              {"kind", r.kind},
              {"config", r.config},
              {"cases", cases},
              {"summary",
               {{"passed", r.passed}, {"failed", r.failed}, {"maxAbsZ", r.max_abs_z}, {"verdict", r.pass ? "PASS" : "FAIL"}}}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.name = j.at("name").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.config = j.at("config");
  for (const auto& c : j.at("cases")) r.cases.push_back(case_from_json(c));
  const Json& s = j.at("summary");
  r.passed = s.at("passed").get<int>();
  r.failed = s.at("failed").get<int>();
  r.max_abs_z = s.at("maxAbsZ").get<double>();
  r.pass = s.at("verdict").get<std::string>() == "PASS";
  return r;
}

Report run_experiment(const ExperimentConfig& c, std::ostream* table) { return Runner(c, table).run(); }

SuiteResult run_preset(const std::string& name, const PresetOptions& opt, std::ostream* table) {
  SuiteResult out;
  out.preset = name;
  for (auto cfg : preset_configs(name)) {
    if (opt.workers > 0) cfg.workers = opt.workers;
    cfg.coefficient_perturbation = opt.coefficient_perturbation;
    if (table) *table << "== " << cfg.name << " (" << cfg.kind << ")\n";
    Report rep = run_experiment(cfg, table);
    out.pass = out.pass && rep.pass;
    out.reports.push_back(std::move(rep));
    if (opt.fail_fast && !out.pass) break;
  }
  return out;
}

Json to_json(const SuiteResult& s) {
  Json reports = Json::array();
  int passed = 0, failed = 0;
  for (const auto& r : s.reports) {
    reports.push_back(to_json(r));
    passed += r.passed;
    failed += r.failed;
  }
  return Json{{"preset", s.preset},
              {"reports", reports},
              {"summary", {{"passed", passed}, {"failed", failed}, {"verdict", s.pass ? "PASS" : "FAIL"}}}};
}

}  // namespace tensorval
