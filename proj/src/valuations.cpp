#include "tensorval/valuations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tensorval/sphere_moments.hpp"

namespace tensorval {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SymTensor zero(int n, int rank) { return SymTensor(n, std::max(rank, 0)); }

std::vector<std::vector<double>> as_std(const std::vector<Vec3>& basis, int n) {
  std::vector<std::vector<double>> out;
  for (const auto& b : basis) out.push_back(to_std(b, n));
  return out;
}

double factorial_d(int k) { return std::tgamma(k + 1.0); }

// Upsilon_r of one simplex: vol * d! / (d + r)! * h_r(v_0, ..., v_d).
void add_simplex_moment(SymTensor& acc, const Simplex& simplex, int n, int r) {
  const int d = simplex.dim;
  std::vector<SymTensor> h(r + 1);
  const auto v0 = to_std(simplex.v[0], n);
  for (int i = 0; i <= r; ++i) h[i] = tensor_power(v0, i);
  for (int t = 1; t <= d; ++t) {
    const SymTensor vt = tensor_power(to_std(simplex.v[t], n), 1);
    // h_i(v_0..v_t) = h_i(v_0..v_{t-1}) + v_t h_{i-1}(v_0..v_t)
    for (int i = 1; i <= r; ++i) h[i] += sym_product(vt, h[i - 1]);
  }
  acc.add_scaled(h[r], simplex.volume * factorial_d(d) / factorial_d(d + r));
}

SymTensor face_metric(const Polytope& p, int j, int idx) {
  return metric_of_subspace(p.ambient_dim(), as_std(p.face_directions(j, idx), p.ambient_dim()));
}

}  // namespace

double ball_volume_value(int m) { return std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m + 1.0); }

SymTensor upsilon(const Polytope& p, int face_dim, int face_index, int r) {
  const int n = p.ambient_dim();
  if (r < 0) return zero(n, 0);
  if (r > kUpsilonRankCap)
    throw std::domain_error("upsilon: rank " + std::to_string(r) + " exceeds the cap " +
                            std::to_string(kUpsilonRankCap));
  SymTensor acc(n, r);
  for (const auto& simplex : p.face_simplices(face_dim, face_index)) add_simplex_moment(acc, simplex, n, r);
  return acc;
}

SymTensor theta(const Polytope& p, int face_dim, int face_index, int s) {
  const int n = p.ambient_dim();
  if (s < 0) return zero(n, 0);
  if (face_dim == n) return s == 0 ? SymTensor::scalar(n, 1.0) : SymTensor(n, s);
  SymTensor t = sphere::cone_moment(p.normal_cone(face_dim, face_index), s, n);
  t *= 1.0 / (factorial_d(s) * sphere::omega(n - face_dim + s));
  return t;
}

SymTensor volume_moment(const Polytope& p, int r) {
  const int n = p.ambient_dim();
  if (r < 0) return zero(n, 0);
  if (p.dim() != n) return SymTensor(n, r);
  return upsilon(p, n, 0, r);
}

MinkowskiTensorValue minkowski_tensor(const Polytope& p, int j, int r, int s) {
  const int n = p.ambient_dim();
  MinkowskiTensorValue out{j, r, s, false, zero(n, r + s)};
  if (j < 0 || j > n || r < 0 || s < 0 || (j == n && s != 0)) return out;
  if (j == n) {
    out.value = volume_moment(p, r);
    return out;
  }
  if (j > p.dim()) return out;
  for (int f = 0; f < p.face_count(j); ++f) out.value += sym_product(upsilon(p, j, f, r), theta(p, j, f, s));
  return out;
}

SymTensor minkowski_tensor(const std::optional<Polytope>& p, int ambient, int j, int r, int s) {
  if (!p) return zero(ambient, r + s);
  return minkowski_tensor(*p, j, r, s).value;
}

MinkowskiTensorValue gen_tcm_total(const Polytope& p, int j, int r, int s) {
  const int n = p.ambient_dim();
  if (j < 1 || j > n - 1) throw std::invalid_argument("gen_tcm_total: requires 1 <= j <= n-1");
  MinkowskiTensorValue out{j, r, s, true, zero(n, r + s + 2)};
  if (r < 0 || s < 0 || j > p.dim()) return out;
  for (int f = 0; f < p.face_count(j); ++f)
    out.value += sym_product(face_metric(p, j, f), upsilon(p, j, f, r), theta(p, j, f, s));
  out.value *= kTwoPi / j;
  return out;
}

SymTensor mcmullen_residual(const Polytope& p, int k, int r, int s) {
  const int n = p.ambient_dim();
  if (k < 0 || k > n) throw std::invalid_argument("mcmullen_residual: requires 0 <= k <= n");
  SymTensor res = minkowski_tensor(p, k, r, s).value;
  res *= kTwoPi * s;
  if (r < 0 || s < 0) return res;
  const SymTensor q = SymTensor::metric(n);
  if (s >= 2 && k <= p.dim()) {
    for (int f = 0; f < p.face_count(k); ++f) {
      const SymTensor q_perp = q - face_metric(p, k, f);
      res -= sym_product(q_perp, upsilon(p, k, f, r), theta(p, k, f, s - 2));
    }
  }
  if (r >= 1 && s >= 1 && k + 1 <= p.dim()) {
    for (int g = 0; g < p.face_count(k + 1); ++g)
      res -= sym_product(face_metric(p, k + 1, g), upsilon(p, k + 1, g, r - 1), theta(p, k + 1, g, s - 1));
  }
  return res;
}

SymTensor expand_gen_tcm(const Polytope& p, int k, int r, int s) {
  const int n = p.ambient_dim();
  if (k < 1 || k > n - 1) throw std::invalid_argument("expand_gen_tcm: requires 1 <= k <= n-1");
  SymTensor out = zero(n, r + s);
  if (r < 0 || r + s < 0) return out;
  const SymTensor q = SymTensor::metric(n);
  for (int p_idx = 0; p_idx <= std::min(r, n - k); ++p_idx) {
    if (s + p_idx - 2 >= 0)
      out += sym_product(q, minkowski_tensor(p, k + p_idx, r - p_idx, s + p_idx - 2).value);
    if (s + p_idx >= 0)
      out.add_scaled(minkowski_tensor(p, k + p_idx, r - p_idx, s + p_idx).value, -kTwoPi * (s + p_idx));
  }
  return out;
}

double intrinsic_volume(const Polytope& p, int j) { return minkowski_tensor(p, j, 0, 0).value.value(); }

double steiner_polynomial(const Polytope& p, double eps) {
  if (eps < 0.0) throw std::invalid_argument("steiner_polynomial: eps must be nonnegative");
  const int n = p.ambient_dim();
  double total = 0.0;
  for (int j = 0; j <= n; ++j) total += ball_volume_value(n - j) * intrinsic_volume(p, j) * std::pow(eps, n - j);
  return total;
}

}  // namespace tensorval
