#pragma once

#include <optional>
#include <vector>

#include "conic/halfspace.hpp"

namespace conic {

// A point satisfying every constraint (closed and strict), found by
// Fourier-Motzkin elimination with strictness tracking, or nullopt if the
// system is infeasible.
std::optional<RatVector> find_point(std::size_t dim, const std::vector<Halfspace>& constraints);

// Finite conjunction of closed and strict linear constraints. The
// constraint list is canonical: primitive normals, parallel constraints
// merged, implied constraints dropped, sorted. Pieces are never empty.
class LocallyClosedPiece {
 public:
  static LocallyClosedPiece make(std::size_t dim, std::vector<Halfspace> constraints);
  static LocallyClosedPiece whole_space(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& constraints() const { return constraints_; }

  bool contains(const RatVector& x) const;
  bool contains(const ScaledPoint& x) const;

  friend bool operator==(const LocallyClosedPiece& a, const LocallyClosedPiece& b) {
    return a.dim_ == b.dim_ && a.constraints_ == b.constraints_;
  }

 private:
  LocallyClosedPiece(std::size_t dim, std::vector<Halfspace> constraints)
      : dim_(dim), constraints_(std::move(constraints)) {}

  std::size_t dim_ = 0;
  std::vector<Halfspace> constraints_;
};

}  // namespace conic
