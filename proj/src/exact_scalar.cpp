#include "tensorval/exact_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tensorval {

Rational factorial(int k) {
  if (k < 0) throw std::domain_error("factorial of a negative integer");
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

ExactScalar::ExactScalar(Rational q, int pi_half_pow) {
  if (q != 0) terms_.push_back({pi_half_pow, std::move(q)});
}

Rational ExactScalar::rational() const {
  if (!is_monomial()) throw std::logic_error("ExactScalar::rational: not a monomial");
  return is_zero() ? Rational(0) : terms_[0].q;
}

int ExactScalar::pi_half_pow() const {
  if (!is_monomial()) throw std::logic_error("ExactScalar::pi_half_pow: not a monomial");
  return is_zero() ? 0 : terms_[0].pi_half_pow;
}

double ExactScalar::to_double() const {
  long double total = 0.0L;
  for (const auto& t : terms_) {
    const long double q = static_cast<long double>(boost::multiprecision::numerator(t.q).convert_to<long double>()) /
                          boost::multiprecision::denominator(t.q).convert_to<long double>();
    total += q * std::pow(std::numbers::pi_v<long double>, 0.5L * t.pi_half_pow);
  }
  return static_cast<double>(total);
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].q;
    if (terms_[i].pi_half_pow != 0) {
      os << "*pi";
      if (terms_[i].pi_half_pow % 2 == 0) {
        if (terms_[i].pi_half_pow != 2) os << "^" << terms_[i].pi_half_pow / 2;
      } else {
        os << "^(" << terms_[i].pi_half_pow << "/2)";
      }
    }
  }
  return os.str();
}

void ExactScalar::add_term(int h, const Rational& q) {
  if (q == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), h,
                             [](const Term& t, int key) { return t.pi_half_pow < key; });
  if (it != terms_.end() && it->pi_half_pow == h) {
    it->q += q;
    if (it->q == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{h, q});
  }
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& t : o.terms_) add_term(t.pi_half_pow, t.q);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (const auto& t : o.terms_) add_term(t.pi_half_pow, -t.q);
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  ExactScalar out;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.add_term(a.pi_half_pow + b.pi_half_pow, a.q * b.q);
  *this = std::move(out);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  if (!o.is_monomial()) throw std::domain_error("ExactScalar: division by a multi-term sum");
  const auto& d = o.terms_[0];
  for (auto& t : terms_) {
    t.q /= d.q;
    t.pi_half_pow -= d.pi_half_pow;
  }
  return *this;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  for (auto& t : out.terms_) t.q = -t.q;
  return out;
}

}  // namespace tensorval
