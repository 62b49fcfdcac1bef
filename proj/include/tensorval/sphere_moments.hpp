// Monomial moments over spherical sections of normal cones.
#pragma once

#include <span>
#include <vector>

#include "tensorval/polytope.hpp"
#include "tensorval/symtensor.hpp"

namespace tensorval::sphere {

/// int_0^{pi/2} cos^a(phi) sin^b(phi) dphi for a, b >= 0.
double half_beta(int a, int b);

/// int_0^theta cos^a sin^b, a, b >= 0.
double arc_trig_integral(int a, int b, double theta);

/// int_{S^{l-1}} u^beta dH^{l-1}, l = beta.size() >= 1. Zero if any exponent is odd.
double full_sphere_moment(std::span<const int> beta);

/// Area of the convex spherical polygon with the given unit vertices.
double solid_angle(std::span<const Vec3> vertices);

/// int u^s over a convex spherical polygon of S^2 as a rank-s tensor on R^3,
/// for every s = 0..smax. Vertices are unit vectors ordered counter-clockwise
/// seen from outside. Exact: the recurrence comes from Stokes' theorem and
/// reduces everything to great-circle arc integrals.
std::vector<SymTensor> spherical_polygon_moments(std::span<const Vec3> vertices, int smax);

/// Same integral by adaptive subdivision with a fixed 25-point rule per
/// triangle; absolute tolerance per coefficient.
SymTensor spherical_polygon_moment_quadrature(std::span<const Vec3> vertices, int s, double atol = 1e-10);

/// int_{N ∩ S^{n-1}} u^s dH (the natural measure of the section) as a rank-s
/// tensor on R^ambient. The empty cone section {0} yields an empty measure.
SymTensor cone_moment(const Cone& cone, int s, int ambient);

/// Surface area omega_m of S^{m-1}.
double omega(int m);

}  // namespace tensorval::sphere
