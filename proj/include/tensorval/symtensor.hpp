// Symmetric tensors over R^n stored as homogeneous polynomials.
//
// A rank-p symmetric tensor T is identified with the polynomial
// x -> T(x, ..., x). The symmetric tensor product is then plain polynomial
// multiplication, and multilinear components are recovered by dividing a
// coefficient by the multinomial multiplicity of its exponent tuple.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tensorval {

/// Exponent tuple of a monomial x_1^{a_1} ... x_n^{a_n}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exponents_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  int operator[](int i) const { return exponents_[i]; }

  // Lexicographic on the exponent tuple.
  auto operator<=>(const MultiIndex& o) const { return exponents_ <=> o.exponents_; }
  bool operator==(const MultiIndex& o) const { return exponents_ == o.exponents_; }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

class SymTensor {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr int kMaxRank = 64;

  SymTensor() : SymTensor(1, 0) {}
  /// Zero tensor of the given shape.
  SymTensor(int dim, int rank);

  static SymTensor scalar(int dim, double value);
  /// The metric tensor Q, polynomial |x|^2.
  static SymTensor metric(int dim);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  /// Monomials of this shape in lexicographic order; coefficient i belongs to monomial i.
  const std::vector<MultiIndex>& monomials() const;
  std::span<const double> coefficients() const { return coeffs_; }
  std::span<double> coefficients() { return coeffs_; }

  double coefficient(const MultiIndex& m) const;
  void set_coefficient(const MultiIndex& m, double v);
  /// Multinomial multiplicity p!/a! of monomial i.
  double multiplicity(int i) const;

  /// Multilinear component T_{i_1...i_p} (indices 0-based).
  double component(std::span<const int> indices) const;
  /// Polynomial value T(x, ..., x).
  double evaluate(std::span<const double> x) const;
  /// The scalar of a rank-0 tensor.
  double value() const;

  double max_abs() const;
  bool is_zero() const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(double f);
  /// this += f * o without a temporary.
  void add_scaled(const SymTensor& o, double f);

  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(SymTensor a, double f) { return a *= f; }
  friend SymTensor operator*(double f, SymTensor a) { return a *= f; }

  bool operator==(const SymTensor& o) const = default;

 private:
  void check_same_shape(const SymTensor& o) const;
  int index_of(const MultiIndex& m) const;

  int dim_;
  int rank_;
  std::vector<double> coeffs_;
};

/// v^p, the polynomial <v, x>^p. p = 0 gives the scalar 1.
SymTensor tensor_power(std::span<const double> v, int p);

/// Symmetric tensor product; ranks add, polynomials multiply.
SymTensor sym_product(const SymTensor& a, const SymTensor& b);
SymTensor sym_product(const SymTensor& a, const SymTensor& b, const SymTensor& c);
/// a^p (p-fold symmetric product); a^0 = 1.
SymTensor sym_power(const SymTensor& a, int p);

/// Q(E) for the subspace spanned by an orthonormal basis: polynomial sum_b <b, x>^2.
/// Throws std::invalid_argument if the basis is not orthonormal within 1e-12.
SymTensor metric_of_subspace(int dim, std::span<const std::vector<double>> basis);

/// Value of the symmetric multilinear form on the given vectors.
double apply(const SymTensor& t, std::span<const std::vector<double>> args);

/// Coefficient-wise linear combination; all terms share dim and rank.
SymTensor combine(std::span<const std::pair<double, SymTensor>> terms);

/// Substitution y_i = <frame_i, x>: maps a polynomial in frame coordinates
/// (dim = frame.size()) to a polynomial on R^dim.
SymTensor pullback(const SymTensor& t, std::span<const std::vector<double>> frame, int dim);

struct Tolerance {
  double atol = 1e-10;
  double rtol = 1e-10;
};

/// Componentwise |a - b| <= atol + rtol * (1 + max|b|).
bool approx_equal(const SymTensor& a, const SymTensor& b, Tolerance tol = {});

/// Number of monomials of degree `rank` in `dim` variables.
int monomial_count(int dim, int rank);

}  // namespace tensorval
