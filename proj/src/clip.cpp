// Intersections of polytopes with half-spaces, polytopes and affine flats.
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "geometry_internal.hpp"
#include "tensorval/polytope.hpp"

namespace tensorval {

namespace {

double tolerance_for(const Polytope& p) { return geometric_tolerance(detail::diameter_bound(p.vertices())); }

// Sutherland-Hodgman step: keeps the part of the closed loop with normal . x <= offset.
// Points created on or found on the cutting plane are appended to `on_plane`.
std::vector<Vec3> clip_loop(const std::vector<Vec3>& loop, const HalfSpace& h, double tol,
                            std::vector<Vec3>* on_plane) {
  std::vector<Vec3> out;
  const std::size_t m = loop.size();
  if (m == 0) return out;
  std::vector<double> dist(m);
  for (std::size_t i = 0; i < m; ++i) dist[i] = h.normal.dot(loop[i]) - h.offset;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = (i + m - 1) % m;
    const bool in_cur = dist[i] <= 0.0;
    const bool in_prev = dist[prev] <= 0.0;
    if (in_cur != in_prev) {
      const double t = dist[prev] / (dist[prev] - dist[i]);
      const Vec3 x = loop[prev] + t * (loop[i] - loop[prev]);
      out.push_back(x);
      if (on_plane) on_plane->push_back(x);
    }
    if (in_cur) {
      out.push_back(loop[i]);
      if (on_plane && dist[i] >= -tol) on_plane->push_back(loop[i]);
    }
  }
  return out;
}

std::optional<Polytope> from_points_or_empty(int ambient, const std::vector<Vec3>& pts) {
  if (pts.empty()) return std::nullopt;
  return Polytope::from_points(ambient, std::span<const Vec3>(pts));
}

std::optional<Polytope> clip_solid(const Polytope& a, std::span<const HalfSpace> halfspaces, double tol) {
  std::vector<FacetPolygon> polys = a.facet_polygons();
  for (const auto& h : halfspaces) {
    std::vector<Vec3> cap;
    std::vector<FacetPolygon> next;
    bool changed = false;
    for (auto& poly : polys) {
      const std::size_t before = poly.points.size();
      auto clipped = clip_loop(poly.points, h, tol, &cap);
      if (clipped.size() != before) changed = true;
      if (clipped.size() >= 3) {
        poly.points = std::move(clipped);
        next.push_back(std::move(poly));
      } else {
        changed = true;
      }
    }
    if (next.empty()) {
      // Touching contact or empty intersection.
      return from_points_or_empty(3, cap);
    }
    if (changed && cap.size() >= 3) {
      const auto welded = detail::weld(cap, tol, nullptr);
      const auto loop = detail::loop_in_plane(welded, h.normal, tol);
      if (loop.size() >= 3) {
        FacetPolygon lid{h.normal, h.offset, {}};
        for (int i : loop) lid.points.push_back(welded[i]);
        next.push_back(std::move(lid));
      }
    }
    polys = std::move(next);
  }
  return Polytope::from_facets(std::move(polys));
}

std::optional<Polytope> interval(int ambient, const Vec3& a, const Vec3& dir, double lo, double hi, double tol) {
  if (lo > hi + tol) return std::nullopt;
  if (lo > hi) hi = lo;
  const std::vector<Vec3> pts{a + lo * dir, a + hi * dir};
  return Polytope::from_points(ambient, std::span<const Vec3>(pts));
}

}  // namespace

std::optional<Polytope> clip_polytope(const Polytope& a, std::span<const HalfSpace> halfspaces) {
  const double tol = tolerance_for(a);
  const int n = a.ambient_dim();
  const auto& verts = a.vertices();
  switch (a.dim()) {
    case 0:
      for (const auto& h : halfspaces)
        if (h.normal.dot(verts[0]) - h.offset > tol) return std::nullopt;
      return a;
    case 1: {
      const Vec3 dir = (verts[1] - verts[0]).normalized();
      double lo = 0.0, hi = (verts[1] - verts[0]).norm();
      for (const auto& h : halfspaces) {
        const double slope = h.normal.dot(dir);
        const double val = h.normal.dot(verts[0]) - h.offset;
        if (std::abs(slope) < 1e-14) {
          if (val > tol) return std::nullopt;
        } else if (slope > 0.0) {
          hi = std::min(hi, -val / slope);
        } else {
          lo = std::max(lo, -val / slope);
        }
      }
      return interval(n, verts[0], dir, lo, hi, tol);
    }
    case 2: {
      std::vector<Vec3> loop;
      for (int v : a.faces(2)[0].vertices) loop.push_back(verts[v]);
      for (const auto& h : halfspaces) {
        std::vector<Vec3> on;
        auto next = clip_loop(loop, h, tol, &on);
        if (next.empty()) return from_points_or_empty(n, on);
        loop = std::move(next);
      }
      return from_points_or_empty(n, loop);
    }
    default:
      return clip_solid(a, halfspaces, tol);
  }
}

std::optional<Polytope> intersect_polytopes(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect_polytopes: ambient dimensions differ");
  const auto hs = b.halfspaces();
  if (b.dim() == b.ambient_dim()) return clip_polytope(a, hs);
  if (a.dim() == a.ambient_dim()) return intersect_polytopes(b, a);
  const auto slice = slice_flat(a, Flat{b.dim(), b.direction_basis(), b.anchor()});
  if (!slice) return std::nullopt;
  return clip_polytope(*slice, hs);
}

std::optional<Polytope> slice_flat(const Polytope& p, const Flat& e) {
  const int n = p.ambient_dim();
  if (e.k < 0 || e.k > n) throw std::invalid_argument("slice_flat: flat dimension out of range");
  if (e.k == n) return p;
  const double tol = tolerance_for(p);
  const auto& verts = p.vertices();

  if (e.k == 0) {
    if (project_point(p, e.anchor).dist > tol) return std::nullopt;
    return detail::make_point(n, e.anchor);
  }

  if (e.k == n - 1) {
    Vec3 normal;
    if (n == 2)
      normal = Vec3(-e.basis[0].y(), e.basis[0].x(), 0.0);
    else
      normal = e.basis[0].cross(e.basis[1]).normalized();
    const double c = normal.dot(e.anchor);
    std::vector<double> dist;
    std::vector<Vec3> pts;
    for (const auto& v : verts) {
      dist.push_back(normal.dot(v) - c);
      if (std::abs(dist.back()) <= tol) pts.push_back(v);
    }
    if (p.dim() >= 1) {
      for (const auto& edge : p.faces(1)) {
        const int i = edge.vertices[0], j = edge.vertices[1];
        if ((dist[i] < -tol && dist[j] > tol) || (dist[i] > tol && dist[j] < -tol)) {
          const double t = dist[i] / (dist[i] - dist[j]);
          pts.push_back(verts[i] + t * (verts[j] - verts[i]));
        }
      }
    }
    return from_points_or_empty(n, pts);
  }

  // Line in R^3: clip the parameter interval against aff P and the relative facets.
  const Vec3& dir = e.basis[0];
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& m : p.normal_basis()) {
    const double slope = m.dot(dir);
    const double val = m.dot(e.anchor - p.anchor());
    if (std::abs(slope) < 1e-12) {
      if (std::abs(val) > tol) return std::nullopt;
    } else {
      const double t = -val / slope;
      lo = std::max(lo, t);
      hi = std::min(hi, t);
    }
  }
  for (const auto& h : p.halfspaces()) {
    const double slope = h.normal.dot(dir);
    const double val = h.normal.dot(e.anchor) - h.offset;
    if (std::abs(slope) < 1e-14) {
      if (val > tol) return std::nullopt;
    } else if (slope > 0.0) {
      hi = std::min(hi, -val / slope);
    } else {
      lo = std::max(lo, -val / slope);
    }
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) return std::nullopt;
  return interval(n, e.anchor, dir, lo, hi, tol);
}

Box translation_window(const Box& a, const Box& b) {
  Box w;
  w.dim = a.dim;
  w.lo = a.lo - b.hi;
  w.hi = a.hi - b.lo;
  return w;
}

Box translation_window(const Polytope& a, const Polytope& b) {
  return translation_window(a.bounding_box(), b.bounding_box());
}

}  // namespace tensorval
