// Convex polytopes in R^2 and R^3 with their full face lattice.
//
// Points are stored as Eigen::Vector3d for both ambient dimensions; in R^2 the
// third coordinate is identically zero and never enters a result.
#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace tensorval {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Face {
  int dim = 0;
  /// Polytope vertex indices; counter-clockwise around the outward side for 2-faces.
  std::vector<int> vertices;
  /// Indices into faces(dim + 1) / faces(dim - 1).
  std::vector<int> up;
  std::vector<int> down;
  /// Indices of the relative facets of the polytope containing this face.
  std::vector<int> facets;
};

struct Simplex {
  int dim = 0;
  std::array<Vec3, 4> v{};
  double volume = 0.0;  ///< H^dim; 1 for a point
};

/// Normal cone N(P, F) = lineality (+) pointed part.
struct Cone {
  /// Orthonormal basis of the lineality space (the part of (aff P)^perp in the ambient space).
  std::vector<Vec3> lineality;
  /// Unit extreme rays of the pointed part. For three rays or more they are
  /// ordered counter-clockwise seen from outside the sphere.
  std::vector<Vec3> generators;
  /// Orthonormal frame of span(generators). For two rays the first frame
  /// vector is generators[0] and the second lies in the plane towards generators[1].
  std::vector<Vec3> pointed_frame;

  int lineality_dim() const { return static_cast<int>(lineality.size()); }
  int pointed_dim() const { return static_cast<int>(pointed_frame.size()); }
};

/// Affine k-flat E = anchor + span(basis).
struct Flat {
  int k = 0;
  std::vector<Vec3> basis;
  Vec3 anchor = Vec3::Zero();

  /// Throws std::invalid_argument when the basis is not orthonormal within 1e-12.
  static Flat make(int ambient, std::vector<Vec3> basis, const Vec3& anchor);
};

struct Box {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();
  int dim = 0;
  /// Lebesgue measure in R^dim computed from the edge lengths.
  double volume() const;
};

/// Outward normal and cyclic vertex loop of a 3-polytope facet.
struct FacetPolygon {
  Vec3 normal;
  double offset = 0.0;  ///< normal . x <= offset on the polytope
  std::vector<Vec3> points;
};

/// Half-space  normal . x <= offset.
struct HalfSpace {
  Vec3 normal;
  double offset = 0.0;
};

class Polytope {
 public:
  /// Convex hull of a nonempty point list in R^ambient, ambient in {2, 3}.
  /// Lower-dimensional hulls are supported; dim() is the intrinsic dimension.
  static Polytope from_points(int ambient, std::span<const Vec3> points);
  static Polytope from_points(int ambient, const std::vector<std::vector<double>>& points);
  /// 3-polytope from closed facet polygons; falls back to a hull of the points
  /// if the loops do not form a consistent closed surface.
  static Polytope from_facets(std::vector<FacetPolygon> facets);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces(int j) const;
  int face_count(int j) const { return j < 0 || j > dim_ ? 0 : static_cast<int>(faces_[j].size()); }
  /// Face counts (f_0, ..., f_dim).
  std::vector<int> face_counts() const;

  /// Orthonormal basis of the direction space of aff P.
  const std::vector<Vec3>& direction_basis() const { return dir_basis_; }
  /// Orthonormal basis of the complement of the direction space within R^ambient.
  const std::vector<Vec3>& normal_basis() const { return normal_basis_; }
  const Vec3& anchor() const { return vertices_.front(); }

  /// Outward unit normal (within aff P) of relative facet i.
  const Vec3& facet_normal(int i) const { return facet_normals_[i]; }
  double facet_offset(int i) const { return facet_offsets_[i]; }
  /// Relative facets as half-spaces (inside aff P).
  std::vector<HalfSpace> halfspaces() const;
  /// Facet loops of a full-dimensional 3-polytope.
  std::vector<FacetPolygon> facet_polygons() const;

  /// H^j(F) for face idx of dimension j (counting measure for vertices).
  double face_measure(int j, int idx) const { return measures_[j][idx]; }
  const std::vector<Simplex>& face_simplices(int j, int idx) const { return simplices_[j][idx]; }
  /// Orthonormal basis of the direction space of face (j, idx).
  const std::vector<Vec3>& face_directions(int j, int idx) const { return face_dirs_[j][idx]; }
  const Cone& normal_cone(int j, int idx) const { return cones_[j][idx]; }

  /// H^dim(P).
  double content() const { return measures_[dim_][0]; }
  Box bounding_box() const;
  /// Vertex-wise affine image x -> R x + t.
  Polytope transformed(const Mat3& rotation, const Vec3& translation) const;

 private:
  Polytope() = default;
  void finalize();
  void build_measures();
  void build_cones();

  int ambient_ = 0;
  int dim_ = 0;
  std::vector<Vec3> vertices_;
  std::array<std::vector<Face>, 4> faces_;
  std::vector<Vec3> dir_basis_;
  std::vector<Vec3> normal_basis_;
  std::vector<Vec3> facet_normals_;
  std::vector<double> facet_offsets_;
  std::array<std::vector<double>, 4> measures_;
  std::array<std::vector<std::vector<Simplex>>, 4> simplices_;
  std::array<std::vector<std::vector<Vec3>>, 4> face_dirs_;
  std::array<std::vector<Cone>, 4> cones_;

  friend class PolytopeBuilder;
};

/// Nearest point of P to x and its distance.
struct Projection {
  Vec3 point;
  double dist = 0.0;
};
Projection project_point(const Polytope& p, const Vec3& x);

/// A ∩ B by half-space clipping; std::nullopt when the intersection is empty.
std::optional<Polytope> intersect_polytopes(const Polytope& a, const Polytope& b);
/// A ∩ {x : h.normal . x <= h.offset for all h}, for full-dimensional A.
std::optional<Polytope> clip_polytope(const Polytope& a, std::span<const HalfSpace> halfspaces);
/// P ∩ E as a (lower-dimensional) polytope embedded in R^n.
std::optional<Polytope> slice_flat(const Polytope& p, const Flat& e);

/// bbox(A) ⊕ (-bbox(B)): contains every t with A ∩ (B + t) nonempty.
Box translation_window(const Polytope& a, const Polytope& b);
Box translation_window(const Box& a, const Box& b);

/// Geometric tolerance used for welding and dimension detection at the given length scale.
double geometric_tolerance(double scale);

std::vector<double> to_std(const Vec3& v, int dim);

}  // namespace tensorval
