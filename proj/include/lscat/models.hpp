#pragma once

#include "lscat/complex.hpp"

#include <vector>

namespace lscat::models {

/// Boundary of a triangle on vertices a, b, c.
ComplexPtr triangle_circle();
/// Cycle on `n` vertices v0..v(n-1) (n >= 3).
ComplexPtr cycle(int n);
/// Full simplex on `n` vertices.
ComplexPtr full_simplex(int n);
/// Product triangulation of T^2 on an m x m grid (m >= 3); vertex (i,j) is t<i><j>.
ComplexPtr torus(int m = 3);
/// m x n grid torus; vertex (i,j) is t<i>_<j> with index i n + j.
ComplexPtr torus(int m, int n);
/// (i,j) -> (i + m/2, j) on torus(m, n), m even: a free involution with quotient torus(m/2, n).
std::vector<int> torus_half_turn(int m, int n);
/// Projection (i,j) -> i of torus(m) onto cycle(m).
SimplicialMap torus_projection(const ComplexPtr& torus, const ComplexPtr& circle);
/// Six-vertex real projective plane on vertices 1..6.
ComplexPtr rp2();
/// Boundary of the (d+1)-dimensional cross-polytope: a d-sphere on vertices p<i>, m<i>.
ComplexPtr cross_polytope(int d);
/// Coordinates +-e_i of the cross-polytope vertices.
Geometry cross_polytope_geometry(const Complex& k);
/// Antipodal involution p<i> <-> m<i>.
std::vector<int> cross_polytope_antipode(const Complex& k);
/// Icosahedron on vertices a..l with antipodal pairs (a,g), (b,h), ..., (f,l).
ComplexPtr icosahedron();
std::vector<int> icosahedron_antipode(const Complex& k);

}  // namespace lscat::models
