#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conic/simple_polar.hpp"
#include "conic/triangulation.hpp"

namespace conic {

// Inner normals of the facets tight at v, in facet order. These are the rays
// of the normal cone N_v; triangulation cells index into this list.
std::vector<IntVector> normal_rays(const Polytope& p, std::size_t vertex);

// T_sigma = {x : n_j . x >= n_j . v for n_j in the cell}.
Cone t_sigma(const Polytope& p, std::size_t vertex, const std::vector<std::size_t>& cell);

struct CellPolarization {
  std::vector<std::size_t> cell;
  RatVector alpha;  // xi = sum over the cell of alpha_j n_j
  std::size_t index = 0;
  LocallyClosedPiece piece;
};

struct LocalContribution {
  std::size_t vertex = 0;
  RatVector apex;
  Functional xi;
  std::vector<CellPolarization> cells;
  IndicatorSum sum{0};
};

// sum over cells of (-1)^ind(sigma) 1 of the polarized T_sigma.
LocalContribution local_contribution(const Polytope& p, std::size_t vertex, const LiftedTriangulation& tri,
                                     const Functional& xi);

IdentityReport delta_invariance_check(const Polytope& p, std::size_t vertex, const Functional& xi,
                                      const LiftedTriangulation& tri1, const LiftedTriangulation& tri2,
                                      const WitnessOptions& options);

// Product of the T_sigma indicators against 1_{T_v P}.
IdentityReport intersection_check(const Polytope& p, std::size_t vertex, const LiftedTriangulation& tri,
                                  const WitnessOptions& options);

using HeightMap = std::map<std::size_t, std::vector<Rational>>;
using TriangulationMap = std::map<std::size_t, LiftedTriangulation>;
using ContributionMap = std::map<std::size_t, LocalContribution>;

// Explicit heights where given; seeded default heights elsewhere. Simple
// vertices get their single cell.
TriangulationMap vertex_triangulations(const Polytope& p, const HeightMap& heights, std::uint64_t seed);

ContributionMap local_contributions(const Polytope& p, const TriangulationMap& tris, const Functional& xi);
IndicatorSum sum_of(const ContributionMap& contributions);

IndicatorSum nonsimple_decomposition(const Polytope& p, const Functional& xi, const TriangulationMap& tris);

// Regular triangulation of the polar dual (one height per facet of P, i.e.
// per vertex of the dual), restricted to the dual facets. Each normal cone
// gets the inherited triangulation with heights -b_F h_F on its rays. P must
// contain the origin in its interior.
TriangulationMap compatible_from_dual(const Polytope& p, const std::vector<Rational>& dual_heights);
LiftedTriangulation dual_triangulation(const Polytope& p, const std::vector<Rational>& dual_heights);
std::vector<Rational> default_dual_heights(const Polytope& p, std::uint64_t seed);

struct ConicViolation {
  std::size_t vertex = 0;
  std::string property;  // "conic" or "positive"
  RatVector direction;
  RatVector point;
  IntPoly value;
};

struct ConicReport {
  bool ok = true;
  std::size_t directions_checked = 0;
  std::optional<ConicViolation> violation;
};

// Samples `samples` seeded random directions per vertex plus interior
// directions of every generator of every piece; checks that the
// contribution is constant along rays from the apex and vanishes on
// xi-negative directions.
ConicReport positive_conic_check(const ContributionMap& contributions, const Functional& xi, std::size_t samples,
                                 std::uint64_t seed);

// Copy of the contribution with one constraint of one piece reversed.
LocalContribution with_flipped_constraint(const LocalContribution& c, std::size_t term, std::size_t constraint);

struct UniquenessReport {
  bool ok = true;
  std::string failure;  // which precondition or vertex failed
  std::optional<std::size_t> vertex;
  IdentityReport identity;
};

UniquenessReport uniqueness_crosscheck(const Polytope& p, const Functional& xi, const ContributionMap& a,
                                       const ContributionMap& b, const WitnessOptions& options);

}  // namespace conic
