#pragma once

#include <vector>

#include "conic/gf.hpp"
#include "conic/linalg.hpp"
#include "conic/nonsimple_polar.hpp"

namespace fixtures {

using namespace conic;

inline RatVector pt(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<Rational> heights(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Polytope segment(long a, long b) { return Polytope::from_vertices({pt({a}), pt({b})}); }

inline Polytope unit_box(std::size_t d) {
  std::vector<RatVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    RatVector p;
    for (std::size_t i = 0; i < d; ++i) p.emplace_back(static_cast<long>(mask >> i & 1));
    pts.push_back(p);
  }
  return Polytope::from_vertices(pts);
}

inline Polytope square() { return unit_box(2); }

// Apex at the origin is vertex 0; facets n1..n4 then the base z <= 1.
inline Polytope pyramid() {
  return Polytope::from_halfspaces({Halfspace::make(iv({1, 0, 1}), Rational(0)),
                                    Halfspace::make(iv({-1, 0, 1}), Rational(0)),
                                    Halfspace::make(iv({0, 1, 1}), Rational(0)),
                                    Halfspace::make(iv({0, -1, 1}), Rational(0)),
                                    Halfspace::make(iv({0, 0, -1}), Rational(-1))});
}

inline Polytope octahedron() {
  return Polytope::from_vertices(
      {pt({1, 0, 0}), pt({-1, 0, 0}), pt({0, 1, 0}), pt({0, -1, 0}), pt({0, 0, 1}), pt({0, 0, -1})});
}

// Cofactor expansion, independent of the elimination code.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Rational term = m[0][j] * cofactor_det(minor);
    total += j % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

// Membership against an explicit inequality list, bypassing the piece code.
inline bool in_halfspaces(const std::vector<Halfspace>& hs, const RatVector& x) {
  for (const auto& h : hs)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

// Lattice points of a box-bounded set given by a predicate.
template <class Pred>
std::size_t count_in_box(std::size_t d, long lo, long hi, Pred inside) {
  std::size_t n = 0;
  std::vector<long> c(d, lo);
  while (true) {
    RatVector x;
    for (long v : c) x.emplace_back(v);
    if (inside(x)) ++n;
    std::size_t i = 0;
    while (i < d && ++c[i] > hi) c[i++] = lo;
    if (i == d) break;
  }
  return n;
}

}  // namespace fixtures
