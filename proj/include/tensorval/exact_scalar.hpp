// Rational multiples of half-integer powers of pi.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tensorval {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// A finite sum  sum_t q_t * pi^(h_t / 2)  kept in normal form: terms sorted by
/// half-exponent h_t, no zero rationals, no repeated exponents. Every
/// coefficient of the integral-geometric formulae is a single term.
class ExactScalar {
 public:
  struct Term {
    int pi_half_pow;
    Rational q;
    bool operator==(const Term&) const = default;
  };

  ExactScalar() = default;
  ExactScalar(Rational q, int pi_half_pow = 0);  // NOLINT(google-explicit-constructor)
  ExactScalar(long long q) : ExactScalar(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  static ExactScalar pi_power(int half_steps) { return ExactScalar(Rational(1), half_steps); }
  static ExactScalar pi() { return pi_power(2); }
  static ExactScalar fraction(long long num, long long den) { return ExactScalar(Rational(num, den)); }

  bool is_zero() const { return terms_.empty(); }
  /// Zero counts as a monomial.
  bool is_monomial() const { return terms_.size() <= 1; }
  bool is_rational() const { return is_zero() || (is_monomial() && terms_[0].pi_half_pow == 0); }
  /// Rational part of a monomial (0 for zero). Throws for multi-term sums.
  Rational rational() const;
  /// pi half-exponent of a monomial (0 for zero). Throws for multi-term sums.
  int pi_half_pow() const;
  const std::vector<Term>& terms() const { return terms_; }

  double to_double() const;
  std::string to_string() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  /// Division is only defined by a nonzero monomial.
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

 private:
  void add_term(int h, const Rational& q);
  std::vector<Term> terms_;
};

Rational factorial(int k);

}  // namespace tensorval
