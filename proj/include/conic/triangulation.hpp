#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conic/matrix.hpp"

namespace conic {

// Heights whose induced regular subdivision is not a triangulation.
class DegenerateHeightsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Regular triangulation of a pointed full-dimensional cone, induced by
// lifting ray j to height heights[j]. A cell is a set of d independent rays;
// its certificate is the linear functional c with c . r = height on the
// cell's rays and c . r < height on every other ray, so that
// max over cells of c . x is the convex piecewise-linear height function.
struct LiftedTriangulation {
  std::vector<IntVector> rays;
  std::vector<Rational> heights;
  std::vector<std::vector<std::size_t>> cells;  // sorted ray indices, lexicographic order
  std::vector<RatVector> certificates;

  std::size_t dim() const { return rays.empty() ? 0 : rays[0].size(); }
  bool verify_certificates() const;
};

// w with w . r > 0 for every ray, if the rays generate a pointed cone.
std::optional<IntVector> transversal(const std::vector<IntVector>& rays);

LiftedTriangulation regular_triangulation(const std::vector<IntVector>& rays, const std::vector<Rational>& heights);

// Seeded small integer heights, redrawn until the subdivision is simplicial.
LiftedTriangulation default_triangulation(const std::vector<IntVector>& rays, std::uint64_t seed);

}  // namespace conic
