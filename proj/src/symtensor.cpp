#include "tensorval/symtensor.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tensorval {

namespace {

constexpr std::uint64_t kRadix = SymTensor::kMaxRank + 1;

std::uint64_t pack(const std::vector<int>& e) {
  std::uint64_t key = 0;
  for (int v : e) key = key * kRadix + static_cast<std::uint64_t>(v);
  return key;
}

struct MonomialTable {
  std::vector<MultiIndex> monomials;
  std::vector<double> multiplicity;
  std::unordered_map<std::uint64_t, int> index;
};

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void enumerate(int dim, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == dim - 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    cur.push_back(a);
    enumerate(dim, remaining - a, cur, out);
    cur.pop_back();
  }
}

std::shared_ptr<const MonomialTable> build_table(int dim, int rank) {
  auto t = std::make_shared<MonomialTable>();
  std::vector<int> cur;
  enumerate(dim, rank, cur, t->monomials);
  const double pf = factorial(rank);
  for (int i = 0; i < static_cast<int>(t->monomials.size()); ++i) {
    const auto& m = t->monomials[i];
    double denom = 1.0;
    for (int a : m.exponents()) denom *= factorial(a);
    t->multiplicity.push_back(pf / denom);
    t->index.emplace(pack(m.exponents()), i);
  }
  return t;
}

const MonomialTable& table(int dim, int rank) {
  thread_local std::unordered_map<std::uint64_t, std::shared_ptr<const MonomialTable>> cache;
  const std::uint64_t key = static_cast<std::uint64_t>(dim) * 1024u + static_cast<std::uint64_t>(rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(dim, rank)).first;
  return *it->second;
}

// Result index of monomial (i of rank ra) * (j of rank rb), flattened as i * nb + j.
const std::vector<int>& product_table(int dim, int ra, int rb) {
  thread_local std::unordered_map<std::uint64_t, std::vector<int>> cache;
  const std::uint64_t key = (static_cast<std::uint64_t>(dim) << 32) |
                            (static_cast<std::uint64_t>(ra) << 16) | static_cast<std::uint64_t>(rb);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const auto& ta = table(dim, ra);
  const auto& tb = table(dim, rb);
  const auto& tc = table(dim, ra + rb);
  std::vector<int> prod(ta.monomials.size() * tb.monomials.size());
  std::vector<int> sum(dim);
  for (std::size_t i = 0; i < ta.monomials.size(); ++i) {
    for (std::size_t j = 0; j < tb.monomials.size(); ++j) {
      for (int d = 0; d < dim; ++d) sum[d] = ta.monomials[i][d] + tb.monomials[j][d];
      prod[i * tb.monomials.size() + j] = tc.index.at(pack(sum));
    }
  }
  return cache.emplace(key, std::move(prod)).first->second;
}

void check_shape(int dim, int rank) {
  if (dim < 1 || dim > SymTensor::kMaxDim)
    throw std::invalid_argument("SymTensor: dimension out of range: " + std::to_string(dim));
  if (rank < 0 || rank > SymTensor::kMaxRank)
    throw std::invalid_argument("SymTensor: rank out of range: " + std::to_string(rank));
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    degree_ += e;
  }
}

int monomial_count(int dim, int rank) {
  check_shape(dim, rank);
  return static_cast<int>(table(dim, rank).monomials.size());
}

SymTensor::SymTensor(int dim, int rank) : dim_(dim), rank_(rank) {
  check_shape(dim, rank);
  coeffs_.assign(table(dim, rank).monomials.size(), 0.0);
}

SymTensor SymTensor::scalar(int dim, double value) {
  SymTensor t(dim, 0);
  t.coeffs_[0] = value;
  return t;
}

SymTensor SymTensor::metric(int dim) {
  SymTensor t(dim, 2);
  for (int i = 0; i < dim; ++i) {
    std::vector<int> e(dim, 0);
    e[i] = 2;
    t.set_coefficient(MultiIndex(e), 1.0);
  }
  return t;
}

const std::vector<MultiIndex>& SymTensor::monomials() const { return table(dim_, rank_).monomials; }

double SymTensor::multiplicity(int i) const { return table(dim_, rank_).multiplicity[i]; }

int SymTensor::index_of(const MultiIndex& m) const {
  if (m.size() != dim_ || m.degree() != rank_)
    throw std::invalid_argument("SymTensor: multi-index does not match tensor shape");
  return table(dim_, rank_).index.at(pack(m.exponents()));
}

double SymTensor::coefficient(const MultiIndex& m) const { return coeffs_[index_of(m)]; }

void SymTensor::set_coefficient(const MultiIndex& m, double v) { coeffs_[index_of(m)] = v; }

double SymTensor::component(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != rank_)
    throw std::invalid_argument("SymTensor::component: arity mismatch");
  std::vector<int> e(dim_, 0);
  for (int i : indices) {
    if (i < 0 || i >= dim_) throw std::out_of_range("SymTensor::component: index out of range");
    ++e[i];
  }
  const int idx = index_of(MultiIndex(e));
  return coeffs_[idx] / multiplicity(idx);
}

double SymTensor::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("SymTensor::evaluate: dimension mismatch");
  const auto& mons = monomials();
  double total = 0.0;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    double term = coeffs_[i];
    for (int d = 0; d < dim_; ++d)
      for (int a = 0; a < mons[i][d]; ++a) term *= x[d];
    total += term;
  }
  return total;
}

double SymTensor::value() const {
  if (rank_ != 0) throw std::logic_error("SymTensor::value: tensor is not a scalar");
  return coeffs_[0];
}

double SymTensor::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool SymTensor::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

void SymTensor::check_same_shape(const SymTensor& o) const {
  if (o.dim_ != dim_ || o.rank_ != rank_)
    throw std::invalid_argument("SymTensor: shape mismatch (dim " + std::to_string(dim_) + "/" +
                                std::to_string(o.dim_) + ", rank " + std::to_string(rank_) + "/" +
                                std::to_string(o.rank_) + ")");
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SymTensor& SymTensor::operator*=(double f) {
  for (double& c : coeffs_) c *= f;
  return *this;
}

void SymTensor::add_scaled(const SymTensor& o, double f) {
  check_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += f * o.coeffs_[i];
}

SymTensor tensor_power(std::span<const double> v, int p) {
  const int dim = static_cast<int>(v.size());
  SymTensor t(dim, p);
  const auto& mons = t.monomials();
  auto c = t.coefficients();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    double term = t.multiplicity(static_cast<int>(i));
    for (int d = 0; d < dim; ++d) term *= std::pow(v[d], mons[i][d]);
    c[i] = term;
  }
  return t;
}

SymTensor sym_product(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sym_product: dimension mismatch");
  SymTensor out(a.dim(), a.rank() + b.rank());
  const auto& prod = product_table(a.dim(), a.rank(), b.rank());
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  auto co = out.coefficients();
  const std::size_t nb = cb.size();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0.0) continue;
    for (std::size_t j = 0; j < nb; ++j) co[prod[i * nb + j]] += ca[i] * cb[j];
  }
  return out;
}

SymTensor sym_product(const SymTensor& a, const SymTensor& b, const SymTensor& c) {
  return sym_product(sym_product(a, b), c);
}

SymTensor sym_power(const SymTensor& a, int p) {
  if (p < 0) throw std::invalid_argument("sym_power: negative exponent");
  SymTensor out = SymTensor::scalar(a.dim(), 1.0);
  for (int i = 0; i < p; ++i) out = sym_product(out, a);
  return out;
}

SymTensor metric_of_subspace(int dim, std::span<const std::vector<double>> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (static_cast<int>(basis[i].size()) != dim)
      throw std::invalid_argument("metric_of_subspace: basis vector has wrong dimension");
    for (std::size_t j = i; j < basis.size(); ++j) {
      const double dot = std::inner_product(basis[i].begin(), basis[i].end(), basis[j].begin(), 0.0);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(dot - want) > 1e-12) throw std::invalid_argument("metric_of_subspace: basis is not orthonormal");
    }
  }
  SymTensor q(dim, 2);
  for (const auto& b : basis) q += tensor_power(b, 2);
  return q;
}

double apply(const SymTensor& t, std::span<const std::vector<double>> args) {
  const int p = t.rank();
  const int dim = t.dim();
  if (static_cast<int>(args.size()) != p) throw std::invalid_argument("apply: arity mismatch");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != dim) throw std::invalid_argument("apply: argument dimension mismatch");
  if (p == 0) return t.value();

  // Sum over all index tuples of component * prod args[k][i_k].
  std::vector<int> idx(p, 0);
  double total = 0.0;
  while (true) {
    double w = 1.0;
    for (int k = 0; k < p && w != 0.0; ++k) w *= args[k][idx[k]];
    if (w != 0.0) total += w * t.component(idx);
    int k = p - 1;
    while (k >= 0 && ++idx[k] == dim) idx[k--] = 0;
    if (k < 0) break;
  }
  return total;
}

SymTensor combine(std::span<const std::pair<double, SymTensor>> terms) {
  if (terms.empty()) throw std::invalid_argument("combine: empty term list");
  SymTensor out(terms.front().second.dim(), terms.front().second.rank());
  for (const auto& [scale, t] : terms) out.add_scaled(t, scale);
  return out;
}

SymTensor pullback(const SymTensor& t, std::span<const std::vector<double>> frame, int dim) {
  if (static_cast<int>(frame.size()) != t.dim()) throw std::invalid_argument("pullback: frame size mismatch");
  const int m = t.dim();
  const int p = t.rank();
  // powers[i][a] = <frame_i, x>^a
  std::vector<std::vector<SymTensor>> powers(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(frame[i].size()) != dim) throw std::invalid_argument("pullback: frame vector dimension");
    powers[i].reserve(p + 1);
    powers[i].push_back(SymTensor::scalar(dim, 1.0));
    for (int a = 1; a <= p; ++a) powers[i].push_back(sym_product(powers[i].back(), tensor_power(frame[i], 1)));
  }
  SymTensor out(dim, p);
  const auto& mons = t.monomials();
  const auto c = t.coefficients();
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (c[k] == 0.0) continue;
    SymTensor term = powers[0][mons[k][0]];
    for (int i = 1; i < m; ++i) term = sym_product(term, powers[i][mons[k][i]]);
    out.add_scaled(term, c[k]);
  }
  return out;
}

bool approx_equal(const SymTensor& a, const SymTensor& b, Tolerance tol) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) return false;
  const double bound = tol.atol + tol.rtol * (1.0 + b.max_abs());
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!(std::abs(ca[i] - cb[i]) <= bound)) return false;
  return true;
}

}  // namespace tensorval
