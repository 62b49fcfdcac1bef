// Monte Carlo estimators for the left-hand sides of the kinematic and Crofton
// formulae and for parallel volumes.
//
// mu on G_n is the Haar probability measure on rotations times Lebesgue
// measure on translations; mu_k on A(n,k) is the Haar probability measure on
// G(n,k) times Lebesgue measure on the orthogonal complement. Each sample
// draws a translation uniformly from a bounding window W and is weighted by
// vol(W).
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tensorval/polytope.hpp"
#include "tensorval/rng.hpp"
#include "tensorval/symtensor.hpp"

namespace tensorval {

struct Target {
  int j = 0;
  int r = 0;
  int s = 0;
  bool operator==(const Target&) const = default;
};

struct Estimate {
  SymTensor mean;
  /// Per-coefficient standard error, same shape as mean.
  SymTensor std_error;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  /// Mean window volume over all samples.
  double window_volume = 0.0;
  bool operator==(const Estimate&) const = default;
};

struct McOptions {
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  /// 0 selects TENSORVAL_WORKERS or the OpenMP default.
  int workers = 0;
  /// Fixed batch size; each batch owns an RNG stream derived from (seed, batch index).
  int batch_size = 4096;
  /// Average each sample with the translation reflected through the window center.
  bool symmetrize = false;
};

enum class Backend { parallel, serial };

/// Haar-uniform rotation of R^n (n = 2, 3), embedded in a 3x3 matrix.
Mat3 sample_rotation(int n, Rng& rng);

std::vector<Estimate> estimate_kinematic(const Polytope& k, const Polytope& k_prime, std::span<const Target> targets,
                                         const McOptions& opt, Backend backend = Backend::parallel);
Estimate estimate_kinematic(const Polytope& k, const Polytope& k_prime, int j, int r, int s, const McOptions& opt,
                            Backend backend = Backend::parallel);

std::vector<Estimate> estimate_crofton(const Polytope& body, int k, std::span<const Target> targets,
                                       const McOptions& opt, Backend backend = Backend::parallel);
Estimate estimate_crofton(const Polytope& body, int k, int j, int r, int s, const McOptions& opt,
                          Backend backend = Backend::parallel);

/// Hit-or-miss estimate of H^n(P + eps B^n) over bbox(P) inflated by eps.
Estimate estimate_parallel_volume(const Polytope& p, double eps, const McOptions& opt,
                                  Backend backend = Backend::parallel);

struct Comparison {
  bool pass = true;
  double max_abs_z = 0.0;
  /// Per coefficient; zero where the standard error vanished and the atol check was used.
  std::vector<double> z;
};

/// z = (mean - exact) / stderr per coefficient; coefficients with stderr < 1e-14
/// are compared with absolute tolerance 1e-10. Throws on shape mismatch.
Comparison compare(const Estimate& est, const SymTensor& exact, double zmax);

/// Worker count from TENSORVAL_WORKERS or the OpenMP default.
int default_workers();

}  // namespace tensorval
