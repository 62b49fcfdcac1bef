// Exact constants of the kinematic and Crofton formulae for Minkowski tensors.
//
// Gamma values at half-integers are rational, or rational times sqrt(pi), so
// every coefficient below is a single ExactScalar term q * pi^(h/2).
// Arguments of the Gamma helpers are passed doubled ("two_arg" means the
// Gamma argument is two_arg / 2).
#pragma once

#include "tensorval/exact_scalar.hpp"

namespace tensorval::coeff {

/// Gamma(two_arg / 2) for two_arg >= 1.
ExactScalar gamma_half(int two_arg);

/// Gamma(num/2) / Gamma(den/2) with the reciprocal-Gamma conventions:
///  - finite / pole               -> 0   (1/Gamma(0) = 1/(-1)! = 0)
///  - pole / pole, equal args     -> 1   (the two Gamma functions cancel)
///  - pole / pole, distinct args  -> limit of the ratio of residues
/// A pole in the numerator over a finite denominator is infinite and throws std::domain_error.
ExactScalar rgamma_ratio(int num_two_arg, int den_two_arg);

/// alpha_{n,j,k} of the principal kinematic and classical Crofton formulae. Always rational.
ExactScalar alpha(int n, int j, int k);

/// e_{n,j,k}^{s,m,p}: coefficient of Q^m Phi_{k+p}^{r-p, s-2m+p}(K) V_{n-k+j}(K').
ExactScalar kf_coeff_e(int n, int j, int k, int s, int m, int p);

/// c_{n,j,k}^{s,i,m}: kinematic coefficients for (generalized) tensorial curvature measures.
ExactScalar tcm_coeff_c(int n, int j, int k, int s, int i, int m);

/// e_{n,j}^s: coefficient of the volume-moment term in the curvature-measure formulae.
ExactScalar tcm_coeff_ebar(int n, int j, int s);

/// Coefficient of Q^{s/2} Phi_n^{r,0}(K) in the Crofton formula for Phi_k^{r,s} on k-flats.
ExactScalar crofton_coeff_equal(int n, int k, int s);

struct SphereConstants {
  ExactScalar omega;  ///< surface area of S^{n-1}
  ExactScalar kappa;  ///< volume of B^n
};
SphereConstants sphere_constants(int n);

/// kappa_n including the convention kappa_0 = 1.
ExactScalar ball_volume(int n);

}  // namespace tensorval::coeff
