#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "conic/cone.hpp"

namespace conic {

// Raised for empty, unbounded or lower-dimensional input. Degenerate input
// is rejected, never repaired.
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Face {
  std::size_t dim = 0;
  std::vector<std::size_t> vertices;  // sorted indices into Polytope::vertices()
  std::vector<std::size_t> facets;    // sorted indices of the facets containing the face
};

// Full-dimensional rational polytope in both representations, with its
// face lattice (every nonempty face, P itself included).
//
// Facets are closed halfspaces n . x >= b with primitive integer n. Vertex
// and facet order is deterministic: V-input keeps the order of the
// irredundant input points; H-input keeps the order of the irredundant
// halfspaces and numbers vertices by first discovery over facet subsets in
// lexicographic order.
class Polytope {
 public:
  static Polytope from_vertices(const std::vector<RatVector>& points);
  static Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }

  // Facets tight at a vertex, in facet order.
  const std::vector<std::size_t>& tight_facets(std::size_t vertex) const { return vertex_facets_.at(vertex); }
  std::size_t vertex_face(std::size_t vertex) const { return vertex_face_.at(vertex); }
  std::size_t whole_face() const { return whole_face_; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool contains(const RatVector& x) const;
  bool in_interior(const RatVector& x) const;
  RatVector barycenter() const;
  std::pair<RatVector, RatVector> bounding_box() const;

  // P + shift and factor * P (factor > 0). Vertex, facet and face order are
  // preserved.
  Polytope translated(const RatVector& shift) const;
  Polytope dilated(const Rational& factor) const;

 private:
  Polytope(std::size_t dim, std::vector<RatVector> vertices, std::vector<Halfspace> facets);
  void build_face_lattice();

  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  std::vector<std::size_t> vertex_face_;
  std::size_t whole_face_ = 0;
};

// Dimension of the affine hull of the given points (-1 for none).
int affine_rank(const std::vector<RatVector>& points);

// Tangent cone T_F P: constraints are the facets containing F, apex a
// relative-interior point of F. T_P P is all of Q^d.
Cone tangent_cone(const Polytope& p, std::size_t face);
Cone vertex_tangent_cone(const Polytope& p, std::size_t vertex);

// Cone in the dual space generated by the inner facet normals at a vertex.
Cone normal_cone(const Polytope& p, std::size_t vertex);

bool is_simple_vertex(const Polytope& p, std::size_t vertex);
bool is_simple(const Polytope& p);

// {y : <y, x> <= 1 for all x in P}. Requires the origin in the interior of P.
// Vertex i of the dual is dual to facet i of P.
Polytope polar_dual(const Polytope& p);

// P translated by -shift, where shift is the vertex barycenter, so that the
// origin lies in the interior.
struct Centering {
  Polytope polytope;
  RatVector shift;
};
Centering center_at_barycenter(const Polytope& p);

}  // namespace conic
