#pragma once

#include <vector>

#include "conic/halfspace.hpp"

namespace conic {

// Subsets of {0, ..., n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

// Decomposition of {y : n . y >= 0}: a basis of its lineality space and the
// extreme rays of its pointed part (taken inside the orthogonal complement
// of the lineality space).
struct RayDecomposition {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
RayDecomposition cone_rays(const std::vector<IntVector>& normals, std::size_t dim);

// Polyhedral cone apex + C. Both representations are kept: closed
// constraints tight at the apex, and generators = extreme rays of the
// pointed part together with +/- a basis of the lineality space.
class Cone {
 public:
  // {x : n . (x - apex) >= 0 for every n in normals}.
  static Cone from_constraints(RatVector apex, const std::vector<IntVector>& normals);
  // apex + cone(generators). Generators must span Q^d.
  static Cone from_generators(RatVector apex, const std::vector<IntVector>& generators);
  static Cone whole_space(RatVector apex);

  std::size_t dim() const { return apex_.size(); }
  const RatVector& apex() const { return apex_; }
  const std::vector<Halfspace>& constraints() const { return constraints_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality_basis() const { return lineality_; }
  std::vector<IntVector> generators() const;
  std::size_t lineality_dim() const { return lineality_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_simplicial() const { return is_pointed() && rays_.size() == dim(); }

  bool contains(const RatVector& x) const;

 private:
  Cone() = default;
  void check_consistency() const;

  RatVector apex_;
  std::vector<Halfspace> constraints_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
};

inline std::size_t lineality_dim(const Cone& c) { return c.lineality_dim(); }

}  // namespace conic
