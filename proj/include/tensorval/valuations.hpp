// Minkowski tensors of polytopes and the identities relating them.
//
// For a face F of P with dim F = k:
//   Upsilon_r(F)  = 1/r! int_F x^r dH^k
//   Theta_s(P, F) = 1/(s! omega_{n-k+s}) int_{N(P,F) ∩ S^{n-1}} u^s dH^{n-k-1}
// and Phi_k^{r,s}(P) = sum_{F in F_k(P)} Upsilon_r(F) Theta_s(P, F).
// Negative r or s give zero. For full-dimensional P the section of N(P,P) is
// empty and Theta_s(P,P) = 1{s = 0}.
#pragma once

#include <optional>

#include "tensorval/polytope.hpp"
#include "tensorval/symtensor.hpp"

namespace tensorval {

/// Largest r accepted by upsilon and volume_moment.
inline constexpr int kUpsilonRankCap = 8;

struct MinkowskiTensorValue {
  int j = 0;
  int r = 0;
  int s = 0;
  /// True for the generalized (Q(F)-weighted) curvature measure variant.
  bool generalized = false;
  SymTensor value;
};

/// Rank-r tensor; a rank-0 zero for r < 0. Throws std::domain_error above kUpsilonRankCap.
SymTensor upsilon(const Polytope& p, int face_dim, int face_index, int r);
SymTensor theta(const Polytope& p, int face_dim, int face_index, int s);

/// Phi_j^{r,s}(P), zero outside the index range (j in 0..n, r, s >= 0, s = 0 when j = n).
MinkowskiTensorValue minkowski_tensor(const Polytope& p, int j, int r, int s);
/// Same, with an empty body giving the zero tensor.
SymTensor minkowski_tensor(const std::optional<Polytope>& p, int ambient, int j, int r, int s);

/// Phi_n^{r,0}(P) = 1/r! int_P x^r; zero unless P is full-dimensional.
SymTensor volume_moment(const Polytope& p, int r);

/// phi_j^{r,s,1}(P, R^n) = (2 pi / j) sum_{F in F_j} Q(F) Upsilon_r(F) Theta_s(P,F), 1 <= j <= n-1.
MinkowskiTensorValue gen_tcm_total(const Polytope& p, int j, int r, int s);

/// 2 pi s Phi_k^{r,s} - sum_F Q(F^perp) Upsilon_r Theta_{s-2} - sum_G Q(G) Upsilon_{r-1} Theta_{s-1}.
SymTensor mcmullen_residual(const Polytope& p, int k, int r, int s);

/// sum_{p=0}^{min(r, n-k)} (Q Phi_{k+p}^{r-p,s+p-2} - 2 pi (s+p) Phi_{k+p}^{r-p,s+p}), 1 <= k <= n-1.
/// Equals (k / 2 pi) gen_tcm_total(P, k, r, s - 2).
SymTensor expand_gen_tcm(const Polytope& p, int k, int r, int s);

/// Intrinsic volume V_j(P).
double intrinsic_volume(const Polytope& p, int j);

/// H^n(P + eps B^n) = sum_j kappa_{n-j} V_j(P) eps^{n-j}.
double steiner_polynomial(const Polytope& p, double eps);

/// kappa_m, volume of the unit m-ball (kappa_0 = 1).
double ball_volume_value(int m);

}  // namespace tensorval
