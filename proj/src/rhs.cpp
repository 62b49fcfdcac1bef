#include "tensorval/rhs.hpp"

#include <stdexcept>

#include "tensorval/coefficients.hpp"
#include "tensorval/valuations.hpp"

namespace tensorval {

namespace {

void check_rs(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("rhs: r and s must be nonnegative");
}

}  // namespace

SymTensor rhs_kinematic(const Polytope& k_body, const Polytope& k_prime, int j, int r, int s, RhsOptions opt) {
  const int n = k_body.ambient_dim();
  if (k_prime.ambient_dim() != n) throw std::invalid_argument("rhs_kinematic: ambient dimensions differ");
  if (j < 0 || j > n) throw std::invalid_argument("rhs_kinematic: requires 0 <= j <= n");
  if (j == n && s != 0) throw std::invalid_argument("rhs_kinematic: s must vanish for j = n");
  check_rs(r, s);
  const SymTensor q = SymTensor::metric(n);
  SymTensor out(n, r + s);
  for (int k = j; k <= n; ++k) {
    const double v_prime = intrinsic_volume(k_prime, n - k + j);
    if (v_prime == 0.0) continue;
    for (int p = 0; p <= r; ++p) {
      for (int m = 0; m <= s / 2; ++m) {
        double c = coeff::kf_coeff_e(n, j, k, s, m, p).to_double();
        if (c == 0.0) continue;
        if (k != j) c *= 1.0 + opt.coefficient_perturbation;
        const SymTensor phi = minkowski_tensor(k_body, k + p, r - p, s - 2 * m + p).value;
        out.add_scaled(sym_product(sym_power(q, m), phi), c * v_prime);
      }
    }
  }
  return out;
}

SymTensor rhs_crofton(const Polytope& body, int k, int j, int r, int s, RhsOptions opt) {
  const int n = body.ambient_dim();
  if (k < 0 || k > n) throw std::invalid_argument("rhs_crofton: requires 0 <= k <= n");
  if (j < 0 || j > k) throw std::invalid_argument("rhs_crofton: requires 0 <= j <= k");
  check_rs(r, s);
  const SymTensor q = SymTensor::metric(n);
  SymTensor out(n, r + s);
  if (j == k) {
    if (s % 2 != 0) return out;
    double c = coeff::crofton_coeff_equal(n, k, s).to_double();
    if (k != n) c *= 1.0 + opt.coefficient_perturbation;
    out.add_scaled(sym_product(sym_power(q, s / 2), volume_moment(body, r)), c);
    return out;
  }
  const int kk = n - k + j;
  for (int p = 0; p <= r; ++p) {
    for (int m = 0; m <= s / 2; ++m) {
      double c = coeff::kf_coeff_e(n, j, kk, s, m, p).to_double();
      if (c == 0.0) continue;
      if (kk != j) c *= 1.0 + opt.coefficient_perturbation;
      const SymTensor phi = minkowski_tensor(body, kk + p, r - p, s - 2 * m + p).value;
      out.add_scaled(sym_product(sym_power(q, m), phi), c);
    }
  }
  return out;
}

}  // namespace tensorval
