#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "conic/indicator.hpp"
#include "conic/verify.hpp"

namespace conic {

class NotSimpleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// xi vanishes on an edge (or on a ray of a triangulation cell).
class GenericityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Linear functional x -> xi . x. Kept exactly as given (not made primitive)
// so that the coefficients alpha below match the caller's scaling.
struct Functional {
  IntVector xi;

  Functional() = default;
  explicit Functional(IntVector v);
  Rational operator()(const RatVector& x) const { return dot(xi, x); }
  Integer operator()(const IntVector& x) const { return dot(xi, x); }
};

bool is_generic(const Functional& xi, const Polytope& p);

// Seeded random functional with entries in [-9, 9], redrawn until generic.
Functional random_generic_functional(const Polytope& p, Rng& rng);

struct VertexPolarization {
  std::size_t vertex = 0;
  std::vector<std::size_t> facets;  // the d tight facets, in facet order
  std::vector<IntVector> edges;     // t_i: n_j . t_i = 0 for j != i, n_i . t_i > 0
  std::vector<int> signs;           // sign of xi(t_i), never 0
  std::size_t index = 0;
  RatVector alpha;                  // xi = sum alpha_i n_i
};

VertexPolarization polarize(const Polytope& p, std::size_t vertex, const Functional& xi);

// T^xi_v P: facets with alpha_i < 0 flipped to strict n_i . x < n_i . v.
// Also built by flipping the xi-negative edge directions; the two are
// checked to agree.
LocallyClosedPiece polarized_tangent_cone(const Polytope& p, std::size_t vertex, const Functional& xi);

// sum over vertices of (-1)^ind 1_{T^xi_v P}.
IndicatorSum lv_decomposition(const Polytope& p, const Functional& xi);

// z^{k+} (1-z)^{k-} for the constraints of the polarized cone held with
// equality (indices into polarization.facets).
IntPoly weighted_polarized_piece_value(const VertexPolarization& pol, const std::vector<std::size_t>& equalities);

// Every polarized cone split into the relatively open faces of its closure,
// each weighted by weighted_polarized_piece_value.
IndicatorSum weighted_lv_decomposition(const Polytope& p, const Functional& xi);

// lhs = (-1)^ind 1_{T^xi_v P}; rhs = sum of (-1)^dim F 1_{T_F P} over the faces
// F containing v whose xi-maximum is attained at v.
std::pair<IndicatorSum, IndicatorSum> rearrange_for_vertex(const Polytope& p, std::size_t vertex,
                                                           const Functional& xi);

// All 2^d orientation patterns of the constraints at v, as pieces.
std::vector<LocallyClosedPiece> sign_pattern_pieces(const Polytope& p, std::size_t vertex);

// Every witness lies in exactly one sign pattern piece.
IdentityReport partition_check(const Polytope& p, std::size_t vertex, const WitnessOptions& options);

}  // namespace conic
