// Construction of polytopes: affine hull detection, planar and spatial convex
// hulls, and lattice assembly from facet loops.
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "geometry_internal.hpp"
#include "tensorval/polytope.hpp"

namespace tensorval {

double geometric_tolerance(double scale) { return 1e-9 * std::max(1.0, scale); }

std::vector<double> to_std(const Vec3& v, int dim) { return std::vector<double>(v.data(), v.data() + dim); }

namespace detail {

double diameter_bound(std::span<const Vec3> pts) {
  if (pts.empty()) return 0.0;
  Vec3 lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

std::vector<Vec3> weld(std::span<const Vec3> pts, double tol, std::vector<int>* ids) {
  std::vector<Vec3> out;
  if (ids) ids->clear();
  for (const auto& p : pts) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(out.size()); ++i) {
      if ((out[i] - p).norm() <= tol) {
        found = i;
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(out.size());
      out.push_back(p);
    }
    if (ids) ids->push_back(found);
  }
  return out;
}

AffineHull affine_hull(int ambient, std::span<const Vec3> pts, double tol) {
  AffineHull h;
  h.origin = pts[0];
  auto farthest = [&](auto&& residual) {
    int best = -1;
    double best_d = tol;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const double d = residual(pts[i] - h.origin).norm();
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  };
  auto residual = [&](const Vec3& v) {
    Vec3 r = v;
    for (const auto& e : h.basis) r -= r.dot(e) * e;
    return r;
  };
  for (int d = 0; d < ambient; ++d) {
    const int i = farthest(residual);
    if (i < 0) break;
    h.basis.push_back(residual(pts[i] - h.origin).normalized());
  }
  return h;
}

std::vector<int> planar_hull(const std::vector<Eigen::Vector2d>& p, double tol) {
  const int n = static_cast<int>(p.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p[a].x() < p[b].x() || (p[a].x() == p[b].x() && p[a].y() < p[b].y());
  });
  if (n < 3) return order;
  auto cross = [&](int o, int a, int b) {
    const Eigen::Vector2d u = p[a] - p[o], v = p[b] - p[o];
    return u.x() * v.y() - u.y() * v.x();
  };
  // Pop while the middle point is not strictly left of the chord by more than tol.
  auto keep = [&](int o, int a, int b) { return cross(o, a, b) > tol * (p[b] - p[o]).norm(); };
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && !keep(hull[k - 2], hull[k - 1], order[i])) --k;
    hull[k++] = order[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && !keep(hull[k - 2], hull[k - 1], order[i])) --k;
    hull[k++] = order[i];
  }
  hull.resize(std::max(k - 1, 1));
  // Drop welded duplicates that survive at the seam.
  std::vector<int> out;
  for (int idx : hull)
    if (out.empty() || (p[idx] - p[out.back()]).norm() > tol) out.push_back(idx);
  while (out.size() > 1 && (p[out.front()] - p[out.back()]).norm() <= tol) out.pop_back();
  return out;
}

std::pair<Vec3, Vec3> plane_frame(const Vec3& normal) {
  const Vec3 seed = std::abs(normal.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 u = (seed - seed.dot(normal) * normal).normalized();
  return {u, normal.cross(u)};
}

std::vector<int> loop_in_plane(std::span<const Vec3> pts, const Vec3& normal, double tol) {
  const auto [u, v] = plane_frame(normal);
  std::vector<Eigen::Vector2d> q;
  q.reserve(pts.size());
  for (const auto& x : pts) q.emplace_back(x.dot(u), x.dot(v));
  return planar_hull(q, tol);
}

}  // namespace detail

using detail::AffineHull;

class PolytopeBuilder {
 public:
  static Polytope point(int ambient, const Vec3& p) {
    Polytope P;
    P.ambient_ = ambient;
    P.dim_ = 0;
    P.vertices_ = {p};
    finish(P, {});
    return P;
  }

  static Polytope segment(int ambient, const Vec3& a, const Vec3& b) {
    Polytope P;
    P.ambient_ = ambient;
    P.dim_ = 1;
    P.vertices_ = {a, b};
    P.dir_basis_ = {(b - a).normalized()};
    finish(P, {});
    return P;
  }

  // Loop is counter-clockwise around `normal` (= e3 in the plane case).
  static Polytope polygon(int ambient, std::vector<Vec3> loop, const Vec3& normal) {
    Polytope P;
    P.ambient_ = ambient;
    P.dim_ = 2;
    P.vertices_ = std::move(loop);
    if (ambient == 2) {
      P.dir_basis_ = {Vec3::UnitX(), Vec3::UnitY()};
    } else {
      const auto [u, v] = detail::plane_frame(normal);
      P.dir_basis_ = {u, v};
    }
    finish(P, {});
    return P;
  }

  static Polytope solid(std::vector<Vec3> vertices, std::vector<std::vector<int>> loops, std::vector<Vec3> normals) {
    Polytope P;
    P.ambient_ = 3;
    P.dim_ = 3;
    P.vertices_ = std::move(vertices);
    P.dir_basis_ = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    P.facet_normals_ = std::move(normals);
    finish(P, std::move(loops));
    return P;
  }

 private:
  static void finish(Polytope& P, std::vector<std::vector<int>> loops) {
    const int d = P.dim_;
    const int nv = static_cast<int>(P.vertices_.size());
    for (auto& f : P.faces_) f.clear();

    // Normal basis: complement of the direction space inside R^ambient.
    P.normal_basis_.clear();
    {
      std::vector<Vec3> basis = P.dir_basis_;
      for (int i = 0; i < P.ambient_; ++i) {
        Vec3 e = Vec3::Unit(i);
        for (const auto& b : basis) e -= e.dot(b) * b;
        if (e.norm() > 0.5) {
          e.normalize();
          basis.push_back(e);
          P.normal_basis_.push_back(e);
        }
      }
    }

    for (int i = 0; i < nv; ++i) P.faces_[0].push_back(Face{0, {i}, {}, {}, {}});

    if (d == 1) {
      P.faces_[1].push_back(Face{1, {0, 1}, {}, {0, 1}, {}});
      P.faces_[0][0].up = {0};
      P.faces_[0][1].up = {0};
      P.faces_[0][0].facets = {0};
      P.faces_[0][1].facets = {1};
      P.facet_normals_ = {-P.dir_basis_[0], P.dir_basis_[0]};
    } else if (d == 2) {
      const Vec3 nrm = P.dir_basis_[0].cross(P.dir_basis_[1]);
      Face top{2, {}, {}, {}, {}};
      P.facet_normals_.clear();
      for (int i = 0; i < nv; ++i) {
        const int j = (i + 1) % nv;
        P.faces_[1].push_back(Face{1, {i, j}, {0}, {i, j}, {i}});
        P.facet_normals_.push_back((P.vertices_[j] - P.vertices_[i]).cross(nrm).normalized());
        P.faces_[0][i].up.push_back(i);
        P.faces_[0][j].up.push_back(i);
        top.vertices.push_back(i);
        top.down.push_back(i);
      }
      for (int i = 0; i < nv; ++i) P.faces_[0][i].facets = {(i + nv - 1) % nv, i};
      P.faces_[2].push_back(std::move(top));
    } else if (d == 3) {
      std::map<std::pair<int, int>, int> edge_index;
      const int nf = static_cast<int>(loops.size());
      for (int f = 0; f < nf; ++f) {
        Face face{2, loops[f], {0}, {}, {f}};
        const int m = static_cast<int>(loops[f].size());
        for (int i = 0; i < m; ++i) {
          const int a = loops[f][i], b = loops[f][(i + 1) % m];
          const auto key = std::minmax(a, b);
          auto it = edge_index.find(key);
          if (it == edge_index.end()) {
            const int e = static_cast<int>(P.faces_[1].size());
            it = edge_index.emplace(key, e).first;
            P.faces_[1].push_back(Face{1, {key.first, key.second}, {}, {key.first, key.second}, {}});
            P.faces_[0][key.first].up.push_back(e);
            P.faces_[0][key.second].up.push_back(e);
          }
          face.down.push_back(it->second);
          P.faces_[1][it->second].up.push_back(f);
          P.faces_[1][it->second].facets.push_back(f);
          P.faces_[0][a].facets.push_back(f);
        }
        P.faces_[2].push_back(std::move(face));
      }
      Face top{3, {}, {}, {}, {}};
      top.vertices.resize(nv);
      std::iota(top.vertices.begin(), top.vertices.end(), 0);
      top.down.resize(nf);
      std::iota(top.down.begin(), top.down.end(), 0);
      P.faces_[3].push_back(std::move(top));
      P.facet_offsets_.clear();
      for (int f = 0; f < nf; ++f) {
        double off = 0.0;
        for (int v : loops[f]) off += P.facet_normals_[f].dot(P.vertices_[v]);
        P.facet_offsets_.push_back(off / static_cast<double>(loops[f].size()));
      }
    }
    if (d == 1 || d == 2) {
      P.facet_offsets_.clear();
      // Relative facet f contains vertex f in both cases.
      for (int f = 0; f < static_cast<int>(P.facet_normals_.size()); ++f)
        P.facet_offsets_.push_back(P.facet_normals_[f].dot(P.vertices_[f]));
    }
    P.finalize();
  }
};

Polytope detail::make_point(int ambient, const Vec3& p) { return PolytopeBuilder::point(ambient, p); }

namespace {

void check_ambient(int ambient) {
  if (ambient != 2 && ambient != 3) throw std::invalid_argument("polytopes are supported in R^2 and R^3 only");
}

Vec3 project_onto(const AffineHull& h, const Vec3& p) {
  Vec3 out = h.origin;
  for (const auto& e : h.basis) out += (p - h.origin).dot(e) * e;
  return out;
}

std::optional<Polytope> hull3d(std::span<const Vec3> raw, double tol) {
  const std::vector<Vec3> pts = detail::weld(raw, tol, nullptr);
  const int n = static_cast<int>(pts.size());
  struct Plane {
    Vec3 normal;
    double offset;
    std::vector<int> loop;
  };
  std::vector<Plane> planes;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vec3 nrm = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        const double len = nrm.norm();
        if (len <= tol * std::max((pts[j] - pts[i]).norm(), (pts[k] - pts[i]).norm())) continue;
        nrm /= len;
        double lo = 0.0, hi = 0.0;
        for (const auto& p : pts) {
          const double s = nrm.dot(p - pts[i]);
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
        if (hi > tol && lo < -tol) continue;
        if (hi > tol) nrm = -nrm;
        const double off = nrm.dot(pts[i]);
        const bool dup = std::any_of(planes.begin(), planes.end(), [&](const Plane& pl) {
          return pl.normal.dot(nrm) > 1.0 - 1e-9 && std::abs(pl.offset - off) <= tol;
        });
        if (dup) continue;
        std::vector<int> on;
        std::vector<Vec3> on_pts;
        for (int m = 0; m < n; ++m) {
          if (std::abs(nrm.dot(pts[m]) - off) <= tol) {
            on.push_back(m);
            on_pts.push_back(pts[m]);
          }
        }
        const auto loop_local = detail::loop_in_plane(on_pts, nrm, tol);
        if (loop_local.size() < 3) continue;
        Plane pl{nrm, off, {}};
        for (int idx : loop_local) pl.loop.push_back(on[idx]);
        planes.push_back(std::move(pl));
      }
    }
  }
  if (planes.size() < 4) return std::nullopt;
  std::vector<int> remap(n, -1);
  std::vector<Vec3> verts;
  std::vector<std::vector<int>> loops;
  std::vector<Vec3> normals;
  for (auto& pl : planes) {
    for (int& v : pl.loop) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(verts.size());
        verts.push_back(pts[v]);
      }
      v = remap[v];
    }
    loops.push_back(pl.loop);
    normals.push_back(pl.normal);
  }
  return PolytopeBuilder::solid(std::move(verts), std::move(loops), std::move(normals));
}

}  // namespace

Polytope Polytope::from_points(int ambient, std::span<const Vec3> points) {
  check_ambient(ambient);
  if (points.empty()) throw std::invalid_argument("build_polytope: empty point list");
  std::vector<Vec3> pts(points.begin(), points.end());
  if (ambient == 2)
    for (auto& p : pts) p.z() = 0.0;
  for (const auto& p : pts)
    if (!p.allFinite()) throw std::invalid_argument("build_polytope: non-finite coordinate");
  const double tol = geometric_tolerance(detail::diameter_bound(pts));
  const AffineHull h = detail::affine_hull(ambient, pts, tol);
  const int d = h.dim();

  if (d == 0) return PolytopeBuilder::point(ambient, pts[0]);
  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const double t = (pts[i] - h.origin).dot(h.basis[0]);
      if (t < (pts[lo] - h.origin).dot(h.basis[0])) lo = i;
      if (t > (pts[hi] - h.origin).dot(h.basis[0])) hi = i;
    }
    return PolytopeBuilder::segment(ambient, project_onto(h, pts[lo]), project_onto(h, pts[hi]));
  }
  if (d == 2) {
    Vec3 e1 = h.basis[0], e2 = h.basis[1];
    if (ambient == 2) {
      e1 = Vec3::UnitX();
      e2 = Vec3::UnitY();
    }
    std::vector<Eigen::Vector2d> q;
    q.reserve(pts.size());
    for (const auto& p : pts) q.emplace_back((p - h.origin).dot(e1), (p - h.origin).dot(e2));
    const auto loop = detail::planar_hull(q, tol);
    if (loop.size() < 3) {
      std::vector<Vec3> sub;
      for (int i : loop) sub.push_back(pts[i]);
      return from_points(ambient, std::span<const Vec3>(sub));
    }
    std::vector<Vec3> verts;
    for (int i : loop) verts.push_back(ambient == 2 ? pts[i] : project_onto(h, pts[i]));
    return PolytopeBuilder::polygon(ambient, std::move(verts), e1.cross(e2));
  }
  auto solid = hull3d(pts, tol);
  if (!solid) throw std::runtime_error("build_polytope: spatial hull construction failed");
  return *std::move(solid);
}

Polytope Polytope::from_points(int ambient, const std::vector<std::vector<double>>& points) {
  std::vector<Vec3> pts;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != ambient)
      throw std::invalid_argument("build_polytope: point has wrong dimension");
    Vec3 v = Vec3::Zero();
    for (int i = 0; i < ambient; ++i) v[i] = p[i];
    pts.push_back(v);
  }
  return from_points(ambient, std::span<const Vec3>(pts));
}

Polytope Polytope::from_facets(std::vector<FacetPolygon> facets) {
  std::vector<Vec3> all;
  for (const auto& f : facets) all.insert(all.end(), f.points.begin(), f.points.end());
  if (all.empty()) throw std::invalid_argument("from_facets: no points");
  const double tol = geometric_tolerance(detail::diameter_bound(all));
  auto fallback = [&]() { return from_points(3, std::span<const Vec3>(all)); };

  std::vector<int> ids;
  const std::vector<Vec3> verts = detail::weld(all, tol, &ids);
  if (verts.size() < 4 || detail::affine_hull(3, verts, tol).dim() < 3) return fallback();

  struct Loop {
    Vec3 normal;
    double offset;
    std::vector<int> ids;
  };
  std::vector<Loop> loops;
  std::size_t cursor = 0;
  for (const auto& f : facets) {
    std::vector<int> local(ids.begin() + cursor, ids.begin() + cursor + f.points.size());
    cursor += f.points.size();
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    if (local.size() < 3) continue;
    // Merge with an existing coplanar loop.
    auto same = std::find_if(loops.begin(), loops.end(), [&](const Loop& l) {
      return l.normal.dot(f.normal) > 1.0 - 1e-9 && std::abs(l.offset - f.offset) <= tol;
    });
    if (same != loops.end()) {
      same->ids.insert(same->ids.end(), local.begin(), local.end());
      std::sort(same->ids.begin(), same->ids.end());
      same->ids.erase(std::unique(same->ids.begin(), same->ids.end()), same->ids.end());
    } else {
      loops.push_back(Loop{f.normal, f.offset, std::move(local)});
    }
  }
  std::vector<std::vector<int>> cyc;
  std::vector<Vec3> normals;
  for (const auto& l : loops) {
    std::vector<Vec3> p;
    for (int v : l.ids) p.push_back(verts[v]);
    const auto order = detail::loop_in_plane(p, l.normal, tol);
    if (order.size() < 3) continue;
    std::vector<int> c;
    for (int o : order) c.push_back(l.ids[o]);
    cyc.push_back(std::move(c));
    normals.push_back(l.normal);
  }

  // Every directed edge must be matched by exactly one reversed edge.
  std::map<std::pair<int, int>, int> directed;
  for (const auto& c : cyc)
    for (std::size_t i = 0; i < c.size(); ++i) ++directed[{c[i], c[(i + 1) % c.size()]}];
  for (const auto& [e, count] : directed) {
    if (count != 1) return fallback();
    auto rev = directed.find({e.second, e.first});
    if (rev == directed.end() || rev->second != 1) return fallback();
  }

  std::vector<int> remap(verts.size(), -1);
  std::vector<Vec3> used;
  for (auto& c : cyc) {
    for (int& v : c) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(used.size());
        used.push_back(verts[v]);
      }
      v = remap[v];
    }
  }
  const long euler = static_cast<long>(used.size()) - static_cast<long>(directed.size() / 2) +
                     static_cast<long>(cyc.size());
  if (euler != 2) return fallback();
  return PolytopeBuilder::solid(std::move(used), std::move(cyc), std::move(normals));
}

}  // namespace tensorval
