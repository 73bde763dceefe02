#pragma once

#include <string>

#include "conic/matrix.hpp"

namespace conic {

enum class Sense { Ge, Gt };

// A point with a common positive denominator: x = numerators / denominator.
// Membership tests run on the integer numerators.
struct ScaledPoint {
  IntVector numerators;
  Integer denominator = 1;

  static ScaledPoint from(const RatVector& x);
};

// normal . x >= offset (Ge) or normal . x > offset (Gt).
// The normal is stored as a primitive integer vector; construction through
// make() rescales the offset accordingly.
struct Halfspace {
  IntVector normal;
  Rational offset;
  Sense sense = Sense::Ge;

  static Halfspace make(const RatVector& normal, const Rational& offset, Sense sense = Sense::Ge);
  static Halfspace make(const IntVector& normal, const Rational& offset, Sense sense = Sense::Ge);

  std::size_t dim() const { return normal.size(); }
  Rational slack(const RatVector& x) const { return dot(normal, x) - offset; }
  bool contains(const RatVector& x) const;
  bool contains(const ScaledPoint& x) const;
  bool is_tight(const RatVector& x) const { return slack(x) == 0; }

  // The set-theoretic complement: not(n.x >= b) is (-n).x > -b.
  Halfspace complement() const;

  std::string to_string() const;

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset && a.sense == b.sense;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b);
};

}  // namespace conic
