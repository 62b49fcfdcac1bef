#include "tensorval/coefficients.hpp"

#include <stdexcept>
#include <string>

namespace tensorval::coeff {

namespace {

bool is_pole(int two_arg) { return two_arg <= 0 && two_arg % 2 == 0; }

// Gamma(two_arg/2) at any non-pole half-integer, negative ones via Gamma(x) = Gamma(x+1)/x.
ExactScalar gamma_any(int two_arg) {
  if (is_pole(two_arg)) throw std::domain_error("Gamma pole at " + std::to_string(two_arg) + "/2");
  if (two_arg >= 1) return gamma_half(two_arg);
  return gamma_any(two_arg + 2) / ExactScalar(Rational(two_arg, 2));
}

ExactScalar g(int two_arg) { return gamma_half(two_arg); }

ExactScalar four_pi_pow(int m) {
  return ExactScalar(Rational(BigInt(1) << (2 * m)), 2 * m);
}

void check_jkn(int n, int j, int k) {
  if (n < 1 || j < 0 || j > k || k > n)
    throw std::invalid_argument("coefficient indices require 0 <= j <= k <= n (n=" + std::to_string(n) +
                                ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")");
}

void check_sm(int s, int m) {
  if (s < 0) throw std::invalid_argument("coefficient index s must be nonnegative");
  if (m < 0 || m > s / 2) throw std::invalid_argument("coefficient index m must lie in [0, floor(s/2)]");
}

}  // namespace

ExactScalar gamma_half(int two_arg) {
  if (two_arg <= 0) throw std::invalid_argument("gamma_half: argument must be positive");
  if (two_arg % 2 == 0) return ExactScalar(factorial(two_arg / 2 - 1));
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const int k = (two_arg - 1) / 2;
  return ExactScalar(factorial(2 * k) / (Rational(BigInt(1) << (2 * k)) * factorial(k)), 1);
}

ExactScalar rgamma_ratio(int num_two_arg, int den_two_arg) {
  const bool num_pole = is_pole(num_two_arg);
  const bool den_pole = is_pole(den_two_arg);
  if (den_pole && !num_pole) return ExactScalar();
  if (num_pole && !den_pole)
    throw std::domain_error("rgamma_ratio: pole in numerator over finite denominator");
  if (num_pole && den_pole) {
    // Residue of Gamma at -a is (-1)^a / a!.
    const int a = -num_two_arg / 2;
    const int b = -den_two_arg / 2;
    const Rational sign = ((a - b) % 2 == 0) ? 1 : -1;
    return ExactScalar(sign * factorial(b) / factorial(a));
  }
  return gamma_any(num_two_arg) / gamma_any(den_two_arg);
}

ExactScalar alpha(int n, int j, int k) {
  check_jkn(n, j, k);
  return g(k + 1) * g(n - k + j + 1) / (g(j + 1) * g(n + 1));
}

ExactScalar kf_coeff_e(int n, int j, int k, int s, int m, int p) {
  check_jkn(n, j, k);
  check_sm(s, m);
  if (p < 0) throw std::invalid_argument("kf_coeff_e: p must be nonnegative");
  const int big_m = s / 2;

  // k = j (including k = j = 0): 1{m = 0} for p = 0, zero for p >= 1.
  if (k == j) return (p == 0 && m == 0) ? ExactScalar(1) : ExactScalar();

  const ExactScalar a = alpha(n, j, k);
  const ExactScalar shift = g(k - j + 2 * m) / g(k - j);  // Gamma((k-j)/2 + m) / Gamma((k-j)/2)

  if (p == 0) {
    if (m < big_m) {
      return rgamma_ratio(j + s - 2 * m, j) * g(k) / g(k + s) * shift * a /
             (four_pi_pow(m) * ExactScalar(factorial(m)));
    }
    const ExactScalar lead(Rational(k + 2 * big_m, 2));
    return lead * g(k) / g(j + 2) * g(j + s - 2 * big_m + 2) / g(k + s + 2) * shift * a /
           (four_pi_pow(big_m) * ExactScalar(factorial(big_m)));
  }

  if (m < big_m) {
    const Rational lead = Rational(m * (k - p), k) - Rational((s + p) * (k - j), 2 * k);
    return ExactScalar(lead) * g(k + 2) / g(j + 2) * g(j + s - 2 * m) / g(k + s + 2) * shift * a /
           (four_pi_pow(m) * ExactScalar(factorial(m)));
  }
  // 1 / (floor(s/2) - 1)! read as Gamma(1) / Gamma(floor(s/2)), which vanishes for s < 2.
  return rgamma_ratio(2, 2 * big_m) * g(k) / g(j + 2) * g(j + s - 2 * big_m + 2) / g(k + s + 2) * shift * a /
         four_pi_pow(big_m);
}

ExactScalar tcm_coeff_c(int n, int j, int k, int s, int i, int m) {
  check_jkn(n, j, k);
  check_sm(s, m);
  if (i != 0 && i != 1) throw std::invalid_argument("tcm_coeff_c: i must be 0 or 1");
  if (k == j) return (m == 0 && i == 0) ? ExactScalar(1) : ExactScalar();
  if (i == 1 && m == 0) return ExactScalar();  // binom(0, 1) = 0
  const ExactScalar binom_over_pi = i == 0 ? ExactScalar(1) : ExactScalar(Rational(m), -2);
  return binom_over_pi * g(k + 2) / g(j + 2) * g(j + s - 2 * m + 2) / g(k + s + 2) * g(k - j + 2 * m) / g(k - j) *
         alpha(n, j, k) / (four_pi_pow(m) * ExactScalar(factorial(m)));
}

ExactScalar tcm_coeff_ebar(int n, int j, int s) {
  if (n < 1 || j < 0 || j > n) throw std::invalid_argument("tcm_coeff_ebar: requires 0 <= j <= n");
  if (s < 0) throw std::invalid_argument("tcm_coeff_ebar: s must be nonnegative");
  if (s % 2 != 0) return ExactScalar();
  const ExactScalar two_pi_pow(Rational(BigInt(1) << s), 2 * s);
  const auto wn = sphere_constants(n).omega;
  const auto wns = sphere_constants(n + s).omega;
  return rgamma_ratio(n - j + s, n - j) * wns / wn / (two_pi_pow * ExactScalar(factorial(s / 2)));
}

ExactScalar crofton_coeff_equal(int n, int k, int s) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("crofton_coeff_equal: requires 0 <= k <= n");
  if (s < 0) throw std::invalid_argument("crofton_coeff_equal: s must be nonnegative");
  if (s % 2 != 0) return ExactScalar();
  return g(n) / g(n + s) * rgamma_ratio(n - k + s, n - k) / (four_pi_pow(s / 2) * ExactScalar(factorial(s / 2)));
}

SphereConstants sphere_constants(int n) {
  if (n < 1) throw std::invalid_argument("sphere_constants: n must be positive");
  const ExactScalar omega = ExactScalar(Rational(2), n) / gamma_half(n);
  return {omega, omega / ExactScalar(Rational(n))};
}

ExactScalar ball_volume(int n) {
  if (n == 0) return ExactScalar(1);
  return sphere_constants(n).kappa;
}

}  // namespace tensorval::coeff
