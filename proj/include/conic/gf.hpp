#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conic/polytope.hpp"

namespace conic {

// coeff * (sum over a in numerator of z^a) / prod over b in denominators of (1 - z^b).
struct GFTerm {
  Rational coeff;
  std::vector<IntVector> numerator;
  std::vector<IntVector> denominators;
};

// Finite sum of GFTerms; the empty sum is the zero function.
class RationalGF {
 public:
  explicit RationalGF(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<GFTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Stores the term in normal form: every denominator exponent oriented
  // lexicographically positive via 1/(1-z^-b) = -z^b/(1-z^b), numerator
  // sorted. Zero terms are dropped.
  void add_term(GFTerm term);
  RationalGF& operator+=(const RationalGF& other);
  RationalGF operator-() const;

  // Human-readable form, e.g. "x^-3/(1-x) - x^6/(1-x)". Variables are x in
  // dimension 1 and z1, ..., zd otherwise.
  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<GFTerm> terms_;
};

// Lattice points apex + sum lambda_i t_i with lambda_i in [0,1) (closed flag)
// or (0,1] (open flag), sorted. There are |det(t)| of them.
std::vector<IntVector> enumerate_parallelepiped(const std::vector<IntVector>& generators, const RatVector& apex,
                                                const std::vector<bool>& open);

// Generating function of apex + sum_{closed} Q>=0 t_i + sum_{open} Q>0 t_i.
RationalGF gf_simplicial_cone(const RatVector& apex, const std::vector<IntVector>& generators,
                              const std::vector<bool>& open);

// Half-open simplicial cell of a cone triangulation.
struct HalfOpenCell {
  RatVector apex;
  std::vector<IntVector> generators;
  std::vector<bool> open;
};

// Simplicial cones of the regular triangulation (default heights) of a
// pointed cone.
std::vector<Cone> triangulate_cone(const Cone& cone);

// The same triangulation made half-open so that the cells partition the
// cone: a cell facet is kept exactly when a fixed generic interior vector
// points into the cell across it.
std::vector<HalfOpenCell> half_open_triangulation(const Cone& cone);

// Zero for cones containing a line; otherwise the sum over half-open cells.
RationalGF gf_cone(const Cone& cone);

// sum over vertices v of G(T_v P).
RationalGF brion_gf(const Polytope& p);

// GF image of the Brianchon-Gram decomposition, term by term.
RationalGF gram_gf(const Polytope& p);

// Value at z = 1 through the substitution z_j = exp(s lambda_j) and the
// constant term of the resulting Laurent series in s.
Integer count_lattice_points(const RationalGF& g);

std::vector<IntVector> lattice_points(const Polytope& p);

// sum over m in P cap Z^d of z^m, without denominators.
RationalGF gf_brute_force(const Polytope& p);

// Refutation-sound equality test: for each trial, the Laurent coefficients
// of G1 - G2 along a random direction up to order 1 must vanish, and so must
// its exact value at a random rational point.
bool gf_equal_as_functions(const RationalGF& g1, const RationalGF& g2, std::size_t trials, std::uint64_t seed);

}  // namespace conic
