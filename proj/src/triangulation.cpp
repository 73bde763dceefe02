#include "conic/triangulation.hpp"

#include "conic/cone.hpp"
#include "conic/linalg.hpp"
#include "conic/piece.hpp"

namespace conic {

std::optional<IntVector> transversal(const std::vector<IntVector>& rays) {
  if (rays.empty()) return std::nullopt;
  std::size_t d = rays[0].size();
  std::vector<Halfspace> cons;
  for (const auto& r : rays) {
    if (is_zero(r)) return std::nullopt;
    cons.push_back(Halfspace::make(r, Rational(0), Sense::Gt));
  }
  auto w = find_point(d, cons);
  if (!w) return std::nullopt;
  return primitive(*w);
}

bool LiftedTriangulation::verify_certificates() const {
  if (cells.size() != certificates.size()) return false;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::size_t next = 0;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      Rational value = dot(rays[j], certificates[c]);
      bool in_cell = next < cells[c].size() && cells[c][next] == j;
      if (in_cell) {
        ++next;
        if (value != heights[j]) return false;
      } else if (!(value < heights[j])) {
        return false;
      }
    }
  }
  return true;
}

LiftedTriangulation regular_triangulation(const std::vector<IntVector>& rays, const std::vector<Rational>& heights) {
  if (rays.empty()) throw std::invalid_argument("regular_triangulation: no rays");
  if (rays.size() != heights.size()) throw std::invalid_argument("regular_triangulation: one height per ray required");
  const std::size_t d = rays[0].size();
  for (const auto& r : rays)
    if (r.size() != d) throw std::invalid_argument("regular_triangulation: rays of mixed dimension");
  if (rank(rays, d) != d) throw std::invalid_argument("regular_triangulation: rays do not span Q^d");
  if (!transversal(rays)) throw std::invalid_argument("regular_triangulation: cone is not pointed");

  LiftedTriangulation tri{rays, heights, {}, {}};
  for (const auto& subset : k_subsets(rays.size(), d)) {
    RatMatrix a(d, d);
    RatVector b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a(i, j) = rays[subset[i]][j];
      b[i] = heights[subset[i]];
    }
    auto c = solve_linear(a, b);
    if (!c) continue;
    bool lower = true, touching = false;
    std::size_t next = 0;
    for (std::size_t k = 0; k < rays.size() && lower; ++k) {
      if (next < d && subset[next] == k) {
        ++next;
        continue;
      }
      int s = sign(dot(rays[k], *c) - heights[k]);
      if (s > 0) lower = false;
      if (s == 0) touching = true;
    }
    if (!lower) continue;
    if (touching) throw DegenerateHeightsError("regular_triangulation: heights induce a non-simplicial cell");
    tri.cells.push_back(subset);
    tri.certificates.push_back(std::move(*c));
  }
  if (tri.cells.empty()) throw std::logic_error("regular_triangulation: no lower cells found");
  return tri;
}

LiftedTriangulation default_triangulation(const std::vector<IntVector>& rays, std::uint64_t seed) {
  if (rays.empty()) throw std::invalid_argument("default_triangulation: no rays");
  if (rays.size() == rays[0].size()) return regular_triangulation(rays, std::vector<Rational>(rays.size(), Rational(0)));
  Rng rng(seed);
  const auto bound = static_cast<std::int64_t>(4 * rays.size());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> heights;
    for (std::size_t i = 0; i < rays.size(); ++i) heights.emplace_back(rng.uniform(0, bound));
    try {
      return regular_triangulation(rays, heights);
    } catch (const DegenerateHeightsError&) {
    }
  }
  throw DegenerateHeightsError("default_triangulation: no simplicial heights found");
}

}  // namespace conic
