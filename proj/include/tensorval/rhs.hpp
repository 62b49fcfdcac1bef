// Closed-form right-hand sides of the kinematic and Crofton formulae.
#pragma once

#include "tensorval/polytope.hpp"
#include "tensorval/symtensor.hpp"

namespace tensorval {

struct RhsOptions {
  /// Relative perturbation applied to every non-trivial coefficient (k != j).
  /// Zero in normal use; a nonzero value makes the closed forms deliberately wrong.
  double coefficient_perturbation = 0.0;
};

/// int_{G_n} Phi_j^{r,s}(K ∩ g K') mu(dg) for 0 <= j <= n, r, s >= 0, s = 0 when j = n.
SymTensor rhs_kinematic(const Polytope& k, const Polytope& k_prime, int j, int r, int s, RhsOptions opt = {});

/// int_{A(n,k)} Phi_j^{r,s}(K ∩ E) mu_k(dE) for 0 <= j <= k <= n, r, s >= 0.
SymTensor rhs_crofton(const Polytope& body, int k, int j, int r, int s, RhsOptions opt = {});

}  // namespace tensorval
