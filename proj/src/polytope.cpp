#include "tensorval/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "geometry_internal.hpp"

namespace tensorval {

double Box::volume() const {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) v *= std::max(0.0, hi[i] - lo[i]);
  return v;
}

Flat Flat::make(int ambient, std::vector<Vec3> basis, const Vec3& anchor) {
  if (static_cast<int>(basis.size()) > ambient) throw std::invalid_argument("Flat: too many basis vectors");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (ambient == 2 && basis[i].z() != 0.0) throw std::invalid_argument("Flat: basis leaves the plane");
    for (std::size_t j = 0; j <= i; ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(basis[i].dot(basis[j]) - expect) > 1e-12)
        throw std::invalid_argument("Flat: basis is not orthonormal");
    }
  }
  Flat f;
  f.k = static_cast<int>(basis.size());
  f.basis = std::move(basis);
  f.anchor = anchor;
  if (ambient == 2) f.anchor.z() = 0.0;
  return f;
}

const std::vector<Face>& Polytope::faces(int j) const {
  if (j < 0 || j > dim_) throw std::out_of_range("Polytope::faces: dimension out of range");
  return faces_[j];
}

std::vector<int> Polytope::face_counts() const {
  std::vector<int> out;
  for (int j = 0; j <= dim_; ++j) out.push_back(static_cast<int>(faces_[j].size()));
  return out;
}

std::vector<HalfSpace> Polytope::halfspaces() const {
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i < facet_normals_.size(); ++i) out.push_back({facet_normals_[i], facet_offsets_[i]});
  return out;
}

std::vector<FacetPolygon> Polytope::facet_polygons() const {
  if (dim_ != 3) throw std::logic_error("facet_polygons: polytope is not a 3-polytope");
  std::vector<FacetPolygon> out;
  for (std::size_t f = 0; f < faces_[2].size(); ++f) {
    FacetPolygon poly{facet_normals_[f], facet_offsets_[f], {}};
    for (int v : faces_[2][f].vertices) poly.points.push_back(vertices_[v]);
    out.push_back(std::move(poly));
  }
  return out;
}

Box Polytope::bounding_box() const {
  Box b;
  b.dim = ambient_;
  b.lo = b.hi = vertices_.front();
  for (const auto& v : vertices_) {
    b.lo = b.lo.cwiseMin(v);
    b.hi = b.hi.cwiseMax(v);
  }
  return b;
}

Polytope Polytope::transformed(const Mat3& rotation, const Vec3& translation) const {
  Polytope out = *this;
  for (auto& v : out.vertices_) v = rotation * v + translation;
  for (auto& e : out.dir_basis_) e = rotation * e;
  for (auto& e : out.normal_basis_) e = rotation * e;
  for (std::size_t i = 0; i < out.facet_normals_.size(); ++i) {
    out.facet_normals_[i] = rotation * out.facet_normals_[i];
    out.facet_offsets_[i] += out.facet_normals_[i].dot(translation);
  }
  if (ambient_ == 2)
    for (auto& v : out.vertices_) v.z() = 0.0;
  out.finalize();
  return out;
}

void Polytope::finalize() {
  build_measures();
  build_cones();
}

void Polytope::build_measures() {
  for (int j = 0; j < 4; ++j) {
    measures_[j].assign(faces_[j].size(), 0.0);
    simplices_[j].assign(faces_[j].size(), {});
    face_dirs_[j].assign(faces_[j].size(), {});
  }
  for (std::size_t i = 0; i < faces_[0].size(); ++i) {
    measures_[0][i] = 1.0;
    simplices_[0][i] = {Simplex{0, {vertices_[i]}, 1.0}};
  }
  if (dim_ >= 1) {
    for (std::size_t i = 0; i < faces_[1].size(); ++i) {
      const Vec3& a = vertices_[faces_[1][i].vertices[0]];
      const Vec3& b = vertices_[faces_[1][i].vertices[1]];
      const double len = (b - a).norm();
      measures_[1][i] = len;
      simplices_[1][i] = {Simplex{1, {a, b}, len}};
      face_dirs_[1][i] = {(b - a) / len};
    }
  }
  if (dim_ >= 2) {
    for (std::size_t i = 0; i < faces_[2].size(); ++i) {
      const auto& loop = faces_[2][i].vertices;
      double area = 0.0;
      auto& simp = simplices_[2][i];
      for (std::size_t t = 1; t + 1 < loop.size(); ++t) {
        const Vec3 &a = vertices_[loop[0]], &b = vertices_[loop[t]], &c = vertices_[loop[t + 1]];
        const double vol = 0.5 * (b - a).cross(c - a).norm();
        area += vol;
        simp.push_back(Simplex{2, {a, b, c}, vol});
      }
      measures_[2][i] = area;
      if (dim_ == 2) {
        face_dirs_[2][i] = dir_basis_;
      } else {
        const auto [u, v] = detail::plane_frame(facet_normals_[i]);
        face_dirs_[2][i] = {u, v};
      }
    }
  }
  if (dim_ == 3) {
    Vec3 c = Vec3::Zero();
    for (const auto& v : vertices_) c += v;
    c /= static_cast<double>(vertices_.size());
    double volume = 0.0;
    auto& simp = simplices_[3][0];
    for (const auto& face : faces_[2]) {
      const auto& loop = face.vertices;
      for (std::size_t t = 1; t + 1 < loop.size(); ++t) {
        const Vec3 &a = vertices_[loop[0]], &b = vertices_[loop[t]], &d = vertices_[loop[t + 1]];
        const double vol = std::abs((a - c).dot((b - c).cross(d - c))) / 6.0;
        volume += vol;
        simp.push_back(Simplex{3, {c, a, b, d}, vol});
      }
    }
    measures_[3][0] = volume;
    face_dirs_[3][0] = dir_basis_;
  }
}

void Polytope::build_cones() {
  for (int j = 0; j < 4; ++j) cones_[j].assign(faces_[j].size(), {});
  for (int j = 0; j <= dim_; ++j) {
    for (std::size_t idx = 0; idx < faces_[j].size(); ++idx) {
      Cone& cone = cones_[j][idx];
      cone.lineality = normal_basis_;
      if (j == dim_) continue;
      for (int f : faces_[j][idx].facets) cone.generators.push_back(facet_normals_[f]);
      const int q = dim_ - j;
      if (q == 1) {
        cone.pointed_frame = {cone.generators[0]};
      } else if (q == 2) {
        const Vec3& g0 = cone.generators[0];
        const Vec3& g1 = cone.generators[1];
        cone.pointed_frame = {g0, (g1 - g1.dot(g0) * g0).normalized()};
      } else {
        Vec3 axis = Vec3::Zero();
        for (const auto& g : cone.generators) axis += g;
        axis.normalize();
        const auto [u, v] = detail::plane_frame(axis);
        std::sort(cone.generators.begin(), cone.generators.end(), [&](const Vec3& a, const Vec3& b) {
          return std::atan2(a.dot(v), a.dot(u)) < std::atan2(b.dot(v), b.dot(u));
        });
        cone.pointed_frame = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
      }
    }
  }
}

namespace {

Vec3 closest_on_segment(const Vec3& a, const Vec3& b, const Vec3& x) {
  const Vec3 d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return a;
  const double t = std::clamp((x - a).dot(d) / len2, 0.0, 1.0);
  return a + t * d;
}

// Nearest point of a convex polygon (loop CCW around normal) to a point y lying in its plane.
Vec3 closest_in_polygon(const std::vector<Vec3>& verts, const std::vector<int>& loop, const Vec3& normal,
                        const Vec3& y) {
  const std::size_t m = loop.size();
  bool inside = true;
  for (std::size_t i = 0; i < m && inside; ++i) {
    const Vec3& a = verts[loop[i]];
    const Vec3& b = verts[loop[(i + 1) % m]];
    if ((b - a).cross(y - a).dot(normal) < 0.0) inside = false;
  }
  if (inside) return y;
  Vec3 best = verts[loop[0]];
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec3 c = closest_on_segment(verts[loop[i]], verts[loop[(i + 1) % m]], y);
    const double d = (c - y).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

}  // namespace

Projection project_point(const Polytope& p, const Vec3& x) {
  const auto& verts = p.vertices();
  Vec3 target = x;
  if (p.ambient_dim() == 2) target.z() = 0.0;
  Vec3 nearest;
  switch (p.dim()) {
    case 0:
      nearest = verts[0];
      break;
    case 1:
      nearest = closest_on_segment(verts[0], verts[1], target);
      break;
    case 2: {
      const Vec3 normal = p.direction_basis()[0].cross(p.direction_basis()[1]);
      const Vec3 y = target - (target - p.anchor()).dot(normal) * normal;
      nearest = closest_in_polygon(verts, p.faces(2)[0].vertices, normal, y);
      break;
    }
    default: {
      nearest = target;
      double best_d = std::numeric_limits<double>::infinity();
      for (int f = 0; f < p.face_count(2); ++f) {
        const Vec3& nrm = p.facet_normal(f);
        const double h = nrm.dot(target) - p.facet_offset(f);
        if (h <= 0.0) continue;
        const Vec3 c = closest_in_polygon(verts, p.faces(2)[f].vertices, nrm, target - h * nrm);
        const double d = (c - target).squaredNorm();
        if (d < best_d) {
          best_d = d;
          nearest = c;
        }
      }
    }
  }
  return {nearest, (nearest - target).norm()};
}

}  // namespace tensorval
