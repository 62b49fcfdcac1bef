#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "geometry_internal.hpp"
#include "mc_internal.hpp"
#include "tensorval/valuations.hpp"

namespace tensorval {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec3 random_unit_vector(Rng& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = kTwoPi * rng.uniform();
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

void check_targets(int n, std::span<const Target> targets) {
  if (targets.empty()) throw std::invalid_argument("Monte Carlo: no targets");
  for (const auto& t : targets) {
    if (t.j < 0 || t.j > n || t.r < 0 || t.s < 0)
      throw std::invalid_argument("Monte Carlo: target index out of range");
    if (t.r > kUpsilonRankCap) throw std::invalid_argument("Monte Carlo: target rank exceeds the cap");
  }
}

// Layout of a sample vector: the coefficients of every target, then the window volume.
struct Layout {
  std::vector<int> offset;
  int width = 0;

  Layout(int n, std::span<const Target> targets) {
    for (const auto& t : targets) {
      offset.push_back(width);
      width += monomial_count(n, t.r + t.s);
    }
    ++width;
  }
};

void accumulate(const std::optional<Polytope>& body, std::span<const Target> targets, const Layout& layout,
                double weight, std::vector<double>& out) {
  if (!body) return;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& t = targets[i];
    const SymTensor v = minkowski_tensor(*body, t.j, t.r, t.s).value;
    const auto c = v.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) out[layout.offset[i] + m] += weight * c[m];
  }
}

std::vector<Estimate> finish(const detail::RunningStats& stats, int n, std::span<const Target> targets,
                             const Layout& layout, const McOptions& opt) {
  std::vector<Estimate> out;
  const double count = static_cast<double>(stats.count);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Estimate e;
    const int rank = targets[i].r + targets[i].s;
    e.mean = SymTensor(n, rank);
    e.std_error = SymTensor(n, rank);
    auto mean = e.mean.coefficients();
    auto se = e.std_error.coefficients();
    for (std::size_t m = 0; m < mean.size(); ++m) {
      mean[m] = stats.mean[layout.offset[i] + m];
      se[m] = stats.count > 1 ? std::sqrt(stats.m2[layout.offset[i] + m] / (count - 1.0) / count) : 0.0;
    }
    e.samples = stats.count;
    e.seed = opt.seed;
    e.window_volume = stats.mean[layout.width - 1];
    out.push_back(std::move(e));
  }
  return out;
}

detail::RunningStats run(const detail::SampleFn& fn, int width, const McOptions& opt, Backend backend) {
  return backend == Backend::parallel ? detail::run_batches_parallel(fn, width, opt)
                                      : detail::run_batches_serial(fn, width, opt);
}

Vec3 uniform_in(const Vec3& lo, const Vec3& hi, int dim, Rng& rng) {
  Vec3 t = Vec3::Zero();
  for (int i = 0; i < dim; ++i) t[i] = rng.uniform(lo[i], hi[i]);
  return t;
}

// Direction space L of a Haar-random k-flat through the origin, and an
// orthonormal basis of its complement.
struct RandomSubspace {
  std::vector<Vec3> basis;
  std::vector<Vec3> complement;
};

RandomSubspace sample_subspace(int n, int k, Rng& rng) {
  RandomSubspace out;
  if (k == 0) {
    for (int i = 0; i < n; ++i) out.complement.push_back(Vec3::Unit(i));
  } else if (k == n) {
    for (int i = 0; i < n; ++i) out.basis.push_back(Vec3::Unit(i));
  } else if (n == 2) {
    const double phi = std::numbers::pi * rng.uniform();
    const Vec3 d(std::cos(phi), std::sin(phi), 0.0);
    out.basis = {d};
    out.complement = {Vec3(-d.y(), d.x(), 0.0)};
  } else {
    const Vec3 axis = random_unit_vector(rng);
    const auto [u, v] = detail::plane_frame(axis);
    if (k == 1) {
      out.basis = {axis};
      out.complement = {u, v};
    } else {
      out.basis = {u, v};
      out.complement = {axis};
    }
  }
  return out;
}

}  // namespace

Mat3 sample_rotation(int n, Rng& rng) {
  Mat3 r = Mat3::Identity();
  if (n == 2) {
    const double phi = kTwoPi * rng.uniform();
    r(0, 0) = std::cos(phi);
    r(0, 1) = -std::sin(phi);
    r(1, 0) = std::sin(phi);
    r(1, 1) = std::cos(phi);
    return r;
  }
  if (n != 3) throw std::invalid_argument("sample_rotation: n must be 2 or 3");
  // Uniform unit quaternion (Shoemake's subgroup algorithm).
  const double u1 = rng.uniform(), u2 = rng.uniform(), u3 = rng.uniform();
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const Eigen::Quaterniond q(b * std::cos(kTwoPi * u3), a * std::sin(kTwoPi * u2), a * std::cos(kTwoPi * u2),
                             b * std::sin(kTwoPi * u3));
  return q.toRotationMatrix();
}

std::vector<Estimate> estimate_kinematic(const Polytope& body, const Polytope& moving, std::span<const Target> targets,
                                         const McOptions& opt, Backend backend) {
  const int n = body.ambient_dim();
  if (moving.ambient_dim() != n) throw std::invalid_argument("estimate_kinematic: ambient dimensions differ");
  check_targets(n, targets);
  const Layout layout(n, targets);
  const Box fixed_box = body.bounding_box();
  const double share = opt.symmetrize ? 0.5 : 1.0;

  const detail::SampleFn fn = [&](Rng& rng, std::vector<double>& out) {
    const Mat3 rot = sample_rotation(n, rng);
    Box rotated{rot * moving.vertices()[0], rot * moving.vertices()[0], n};
    for (const auto& v : moving.vertices()) {
      const Vec3 w = rot * v;
      rotated.lo = rotated.lo.cwiseMin(w);
      rotated.hi = rotated.hi.cwiseMax(w);
    }
    const Box window = translation_window(fixed_box, rotated);
    const double vol = window.volume();
    const Vec3 t = uniform_in(window.lo, window.hi, n, rng);
    accumulate(intersect_polytopes(body, moving.transformed(rot, t)), targets, layout, share * vol, out);
    if (opt.symmetrize) {
      const Vec3 t2 = window.lo + window.hi - t;
      accumulate(intersect_polytopes(body, moving.transformed(rot, t2)), targets, layout, share * vol, out);
    }
    out[layout.width - 1] = vol;
  };
  return finish(run(fn, layout.width, opt, backend), n, targets, layout, opt);
}

Estimate estimate_kinematic(const Polytope& k, const Polytope& k_prime, int j, int r, int s, const McOptions& opt,
                            Backend backend) {
  const Target t{j, r, s};
  return estimate_kinematic(k, k_prime, std::span<const Target>(&t, 1), opt, backend).front();
}

std::vector<Estimate> estimate_crofton(const Polytope& body, int k, std::span<const Target> targets,
                                       const McOptions& opt, Backend backend) {
  const int n = body.ambient_dim();
  if (k < 0 || k > n) throw std::invalid_argument("estimate_crofton: requires 0 <= k <= n");
  check_targets(n, targets);
  for (const auto& t : targets)
    if (t.j > k) throw std::invalid_argument("estimate_crofton: requires j <= k");
  const Layout layout(n, targets);
  const double share = opt.symmetrize ? 0.5 : 1.0;

  const detail::SampleFn fn = [&](Rng& rng, std::vector<double>& out) {
    const RandomSubspace sub = sample_subspace(n, k, rng);
    const int c = static_cast<int>(sub.complement.size());
    // Window: bounding box of the projection of the body onto the complement.
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 hi = -lo;
    for (const auto& v : body.vertices()) {
      for (int i = 0; i < c; ++i) {
        lo[i] = std::min(lo[i], v.dot(sub.complement[i]));
        hi[i] = std::max(hi[i], v.dot(sub.complement[i]));
      }
    }
    double vol = 1.0;
    for (int i = 0; i < c; ++i) vol *= hi[i] - lo[i];
    const Vec3 t = uniform_in(lo, hi, c, rng);
    auto flat_at = [&](const Vec3& coords) {
      Vec3 anchor = Vec3::Zero();
      for (int i = 0; i < c; ++i) anchor += coords[i] * sub.complement[i];
      return Flat{k, sub.basis, anchor};
    };
    accumulate(slice_flat(body, flat_at(t)), targets, layout, share * vol, out);
    if (opt.symmetrize) {
      const Vec3 t2 = lo + hi - t;
      accumulate(slice_flat(body, flat_at(t2)), targets, layout, share * vol, out);
    }
    out[layout.width - 1] = vol;
  };
  return finish(run(fn, layout.width, opt, backend), n, targets, layout, opt);
}

Estimate estimate_crofton(const Polytope& body, int k, int j, int r, int s, const McOptions& opt, Backend backend) {
  const Target t{j, r, s};
  return estimate_crofton(body, k, std::span<const Target>(&t, 1), opt, backend).front();
}

Estimate estimate_parallel_volume(const Polytope& p, double eps, const McOptions& opt, Backend backend) {
  if (!(eps > 0.0)) throw std::invalid_argument("estimate_parallel_volume: eps must be positive");
  const int n = p.ambient_dim();
  Box box = p.bounding_box();
  for (int i = 0; i < n; ++i) {
    box.lo[i] -= eps;
    box.hi[i] += eps;
  }
  const double vol = box.volume();
  const double share = opt.symmetrize ? 0.5 : 1.0;
  const detail::SampleFn fn = [&](Rng& rng, std::vector<double>& out) {
    const Vec3 x = uniform_in(box.lo, box.hi, n, rng);
    if (project_point(p, x).dist <= eps) out[0] += share * vol;
    if (opt.symmetrize && project_point(p, box.lo + box.hi - x).dist <= eps) out[0] += share * vol;
    out[1] = vol;
  };
  const Target volume_target{n, 0, 0};
  const Layout layout(n, std::span<const Target>(&volume_target, 1));
  return finish(run(fn, 2, opt, backend), n, std::span<const Target>(&volume_target, 1), layout, opt).front();
}

Comparison compare(const Estimate& est, const SymTensor& exact, double zmax) {
  if (est.mean.dim() != exact.dim() || est.mean.rank() != exact.rank())
    throw std::invalid_argument("compare: estimate and exact value have different shapes");
  Comparison c;
  const auto mean = est.mean.coefficients();
  const auto se = est.std_error.coefficients();
  const auto ex = exact.coefficients();
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const double diff = mean[i] - ex[i];
    if (se[i] < 1e-14) {
      c.z.push_back(0.0);
      if (std::abs(diff) > 1e-10) c.pass = false;
      continue;
    }
    const double z = diff / se[i];
    c.z.push_back(z);
    c.max_abs_z = std::max(c.max_abs_z, std::abs(z));
  }
  if (c.max_abs_z > zmax) c.pass = false;
  return c;
}

}  // namespace tensorval
