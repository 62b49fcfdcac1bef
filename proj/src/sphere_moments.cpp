#include "tensorval/sphere_moments.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tensorval::sphere {

namespace {

std::vector<double> as_std(const Vec3& v, int dim) { return std::vector<double>(v.data(), v.data() + dim); }

double angle_between(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

// int_arc u^k ds along the great-circle arc from a to b (unit vectors), as a tensor on R^3.
SymTensor arc_moment(const Vec3& a, const Vec3& b, int k) {
  const double theta = angle_between(a, b);
  const Vec3 c = (b - a.dot(b) * a).normalized();
  SymTensor local(2, k);
  const auto& mons = local.monomials();
  auto coeffs = local.coefficients();
  for (int i = 0; i < local.size(); ++i)
    coeffs[i] = local.multiplicity(i) * arc_trig_integral(mons[i][0], mons[i][1], theta);
  const std::vector<std::vector<double>> frame{as_std(a, 3), as_std(c, 3)};
  return pullback(local, frame, 3);
}

}  // namespace

double omega(int m) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

double half_beta(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("half_beta: negative exponent");
  return 0.5 * std::tgamma(0.5 * (a + 1)) * std::tgamma(0.5 * (b + 1)) / std::tgamma(0.5 * (a + b + 2));
}

double arc_trig_integral(int a, int b, double theta) {
  if (a < 0 || b < 0) throw std::invalid_argument("arc_trig_integral: negative exponent");
  const double c = std::cos(theta), s = std::sin(theta);
  if (b >= 2)
    return -std::pow(c, a + 1) * std::pow(s, b - 1) / (a + b) +
           static_cast<double>(b - 1) / (a + b) * arc_trig_integral(a, b - 2, theta);
  if (b == 1) return (1.0 - std::pow(c, a + 1)) / (a + 1);
  if (a == 0) return theta;
  if (a == 1) return s;
  return std::pow(c, a - 1) * s / a + static_cast<double>(a - 1) / a * arc_trig_integral(a - 2, 0, theta);
}

double full_sphere_moment(std::span<const int> beta) {
  if (beta.empty()) throw std::invalid_argument("full_sphere_moment: empty exponent list");
  double num = 2.0;
  int total = 0;
  for (int b : beta) {
    if (b < 0) throw std::invalid_argument("full_sphere_moment: negative exponent");
    if (b % 2 != 0) return 0.0;
    num *= std::tgamma(0.5 * (b + 1));
    total += b;
  }
  return num / std::tgamma(0.5 * (total + static_cast<int>(beta.size())));
}

double solid_angle(std::span<const Vec3> v) {
  double area = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Vec3 &a = v[0], &b = v[i], &c = v[i + 1];
    const double det = a.dot(b.cross(c));
    area += 2.0 * std::atan2(det, 1.0 + a.dot(b) + b.dot(c) + c.dot(a));
  }
  return area;
}

std::vector<SymTensor> spherical_polygon_moments(std::span<const Vec3> v, int smax) {
  if (v.size() < 3) throw std::invalid_argument("spherical_polygon_moments: need at least three vertices");
  const std::size_t m = v.size();
  std::vector<Vec3> conormals;
  for (std::size_t i = 0; i < m; ++i) conormals.push_back(v[i].cross(v[(i + 1) % m]).normalized());

  std::vector<SymTensor> tau;
  tau.push_back(SymTensor::scalar(3, solid_angle(v)));
  const SymTensor q = SymTensor::metric(3);
  for (int s = 1; s <= smax; ++s) {
    SymTensor t(3, s);
    if (s >= 2) t.add_scaled(sym_product(q, tau[s - 2]), s - 1);
    for (std::size_t e = 0; e < m; ++e)
      t += sym_product(tensor_power(as_std(conormals[e], 3), 1), arc_moment(v[e], v[(e + 1) % m], s - 1));
    t *= 1.0 / (s + 1);
    tau.push_back(std::move(t));
  }
  return tau;
}

namespace {

struct FlatTriangle {
  Vec3 a, b, c;
};

// Collapsed tensor-product Gauss-Legendre rule (5 x 5) on the unit square.
constexpr std::array<double, 5> kNodes{-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                       0.9061798459386640};
constexpr std::array<double, 5> kWeights{0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                         0.4786286704993665, 0.2369268850561891};

SymTensor rule(const FlatTriangle& t, int s, double height) {
  SymTensor acc(3, s);
  const double twice_area = (t.b - t.a).cross(t.c - t.a).norm();
  for (int i = 0; i < 5; ++i) {
    const double x = 0.5 * (kNodes[i] + 1.0);
    for (int j = 0; j < 5; ++j) {
      const double y = 0.5 * (kNodes[j] + 1.0);
      const Vec3 p = (1.0 - x) * (1.0 - y) * t.a + x * t.b + (1.0 - x) * y * t.c;
      const double r = p.norm();
      const double w = 0.25 * kWeights[i] * kWeights[j] * (1.0 - x) * twice_area * height / (r * r * r);
      acc.add_scaled(tensor_power(as_std(p / r, 3), s), w);
    }
  }
  return acc;
}

SymTensor adaptive(const FlatTriangle& t, int s, double height, const SymTensor& coarse, double atol, int depth) {
  const Vec3 ab = 0.5 * (t.a + t.b), bc = 0.5 * (t.b + t.c), ca = 0.5 * (t.c + t.a);
  const std::array<FlatTriangle, 4> kids{FlatTriangle{t.a, ab, ca}, FlatTriangle{ab, t.b, bc},
                                         FlatTriangle{ca, bc, t.c}, FlatTriangle{ab, bc, ca}};
  std::array<SymTensor, 4> parts;
  SymTensor fine(3, s);
  for (int i = 0; i < 4; ++i) {
    parts[i] = rule(kids[i], s, height);
    fine += parts[i];
  }
  if ((fine - coarse).max_abs() <= atol || depth >= 12) return fine;
  SymTensor out(3, s);
  for (int i = 0; i < 4; ++i) out += adaptive(kids[i], s, height, parts[i], 0.25 * atol, depth + 1);
  return out;
}

}  // namespace

SymTensor spherical_polygon_moment_quadrature(std::span<const Vec3> v, int s, double atol) {
  if (v.size() < 3) throw std::invalid_argument("spherical_polygon_moment_quadrature: need three vertices");
  SymTensor total(3, s);
  const double share = atol / static_cast<double>(v.size() - 2);
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const FlatTriangle t{v[0], v[i], v[i + 1]};
    const Vec3 n = (t.b - t.a).cross(t.c - t.a).normalized();
    const double height = std::abs(n.dot(t.a));
    total += adaptive(t, s, height, rule(t, s, height), share, 0);
  }
  return total;
}

SymTensor cone_moment(const Cone& cone, int s, int ambient) {
  const int q = cone.pointed_dim();
  const int l = cone.lineality_dim();
  if (q + l == 0) return SymTensor(ambient, s);
  if (q == 3) return spherical_polygon_moments(cone.generators, s)[s];

  const double theta = q == 2 ? angle_between(cone.generators[0], cone.generators[1]) : 0.0;
  SymTensor local(q + l, s);
  const auto& mons = local.monomials();
  auto coeffs = local.coefficients();
  std::vector<int> pointed_exp(q), lineal_exp(l);
  for (int i = 0; i < local.size(); ++i) {
    int deg_a = 0, deg_b = 0;
    for (int t = 0; t < q; ++t) deg_a += pointed_exp[t] = mons[i][t];
    for (int t = 0; t < l; ++t) deg_b += lineal_exp[t] = mons[i][q + t];
    double a_part = 1.0;
    if (q == 2) a_part = arc_trig_integral(pointed_exp[0], pointed_exp[1], theta);
    double moment;
    if (l == 0) {
      moment = a_part;
    } else if (q == 0) {
      moment = full_sphere_moment(lineal_exp);
    } else {
      moment = half_beta(deg_a + q - 1, deg_b + l - 1) * a_part * full_sphere_moment(lineal_exp);
    }
    coeffs[i] = local.multiplicity(i) * moment;
  }
  std::vector<std::vector<double>> frame;
  for (const auto& f : cone.pointed_frame) frame.push_back(as_std(f, ambient));
  for (const auto& f : cone.lineality) frame.push_back(as_std(f, ambient));
  return pullback(local, frame, ambient);
}

}  // namespace tensorval::sphere
