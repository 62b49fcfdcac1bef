#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tensorval/polytope.hpp"

namespace tensorval::detail {

struct AffineHull {
  Vec3 origin = Vec3::Zero();
  std::vector<Vec3> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

double diameter_bound(std::span<const Vec3> pts);
/// Merges points closer than tol; ids (optional) maps input index -> output index.
std::vector<Vec3> weld(std::span<const Vec3> pts, double tol, std::vector<int>* ids);
AffineHull affine_hull(int ambient, std::span<const Vec3> pts, double tol);
/// Counter-clockwise hull indices, collinear points removed.
std::vector<int> planar_hull(const std::vector<Eigen::Vector2d>& p, double tol);
/// Right-handed (u, v) with u x v = normal.
std::pair<Vec3, Vec3> plane_frame(const Vec3& normal);
/// Hull loop of points lying in a plane, counter-clockwise around normal.
std::vector<int> loop_in_plane(std::span<const Vec3> pts, const Vec3& normal, double tol);

Polytope make_point(int ambient, const Vec3& p);

}  // namespace tensorval::detail
