#pragma once

#include <vector>

#include "conic/piece.hpp"
#include "conic/polynomial.hpp"
#include "conic/polytope.hpp"

namespace conic {

struct IndicatorTerm {
  IntPoly coeff;
  LocallyClosedPiece piece;
};

// Formal sum  sum_i coeff_i * 1_{piece_i}  with coefficients in Z[z].
class IndicatorSum {
 public:
  explicit IndicatorSum(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<IndicatorTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(IntPoly coeff, LocallyClosedPiece piece);
  IndicatorSum& operator+=(const IndicatorSum& other);
  IndicatorSum operator-() const;

  IntPoly evaluate(const RatVector& x) const;
  IntPoly evaluate(const ScaledPoint& x) const;

  // Every coefficient evaluated at z = value.
  IndicatorSum specialized(const Integer& value) const;

 private:
  std::size_t dim_;
  std::vector<IndicatorTerm> terms_;
};

inline IntPoly evaluate(const IndicatorSum& s, const RatVector& x) { return s.evaluate(x); }

// The closed piece underlying a cone (its constraint representation).
LocallyClosedPiece piece_of(const Cone& cone);

IndicatorSum indicator_of(const Polytope& p);
IndicatorSum interior_indicator(const Polytope& p);

// sum over nonempty faces F (P included) of (-1)^dim F * 1_{T_F P}.
IndicatorSum gram_decomposition(const Polytope& p);

// z^codim(F) on the relative interior of each face F, zero outside P.
// Realized as one relative-interior piece per face.
IndicatorSum weighted_indicator(const Polytope& p);

// Relative interior of a face: equalities on its facets, strict elsewhere.
LocallyClosedPiece relative_interior(const Polytope& p, std::size_t face);

}  // namespace conic
