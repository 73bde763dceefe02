#include "conic/halfspace.hpp"

#include <stdexcept>
#include <tuple>

namespace conic {

ScaledPoint ScaledPoint::from(const RatVector& x) {
  ScaledPoint p;
  for (const auto& c : x) p.denominator = lcm(p.denominator, c.get_den());
  p.numerators.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    p.numerators[i] = x[i].get_num() * (p.denominator / x[i].get_den());
  }
  return p;
}

Halfspace Halfspace::make(const RatVector& normal, const Rational& offset, Sense sense) {
  if (is_zero(normal)) throw std::invalid_argument("Halfspace: zero normal");
  IntVector prim = primitive(normal);
  // normal = factor * prim for a positive rational factor.
  std::size_t k = 0;
  while (normal[k] == 0) ++k;
  Rational factor = normal[k] / Rational(prim[k]);
  return Halfspace{std::move(prim), offset / factor, sense};
}

Halfspace Halfspace::make(const IntVector& normal, const Rational& offset, Sense sense) {
  return make(to_rational(normal), offset, sense);
}

bool Halfspace::contains(const RatVector& x) const {
  Rational s = slack(x);
  return sense == Sense::Ge ? s >= 0 : s > 0;
}

bool Halfspace::contains(const ScaledPoint& x) const {
  if (x.numerators.size() != normal.size()) throw std::invalid_argument("Halfspace::contains: dimension mismatch");
  // normal . X / D  vs  p / q   <=>   (normal . X) q  vs  p D
  Integer lhs = dot(normal, x.numerators) * offset.get_den();
  Integer rhs = offset.get_num() * x.denominator;
  int c = cmp(lhs, rhs);
  return sense == Sense::Ge ? c >= 0 : c > 0;
}

Halfspace Halfspace::complement() const {
  return Halfspace{negate(normal), -offset, sense == Sense::Ge ? Sense::Gt : Sense::Ge};
}

std::string Halfspace::to_string() const {
  return conic::to_string(normal) + (sense == Sense::Ge ? ".x >= " : ".x > ") + conic::to_string(offset);
}

bool operator<(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  if (a.sense != b.sense) return a.sense < b.sense;
  return a.offset < b.offset;
}

}  // namespace conic
