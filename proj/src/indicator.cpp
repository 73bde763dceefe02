#include "conic/indicator.hpp"

#include <stdexcept>

namespace conic {

void IndicatorSum::add(IntPoly coeff, LocallyClosedPiece piece) {
  if (piece.dim() != dim_) throw std::invalid_argument("IndicatorSum::add: dimension mismatch");
  if (coeff.is_zero()) return;
  terms_.push_back({std::move(coeff), std::move(piece)});
}

IndicatorSum& IndicatorSum::operator+=(const IndicatorSum& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("IndicatorSum: dimension mismatch");
  for (const auto& t : other.terms_) terms_.push_back(t);
  return *this;
}

IndicatorSum IndicatorSum::operator-() const {
  IndicatorSum r(dim_);
  for (const auto& t : terms_) r.terms_.push_back({-t.coeff, t.piece});
  return r;
}

IntPoly IndicatorSum::evaluate(const RatVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("evaluate: dimension mismatch");
  return evaluate(ScaledPoint::from(x));
}

IntPoly IndicatorSum::evaluate(const ScaledPoint& x) const {
  IntPoly value;
  for (const auto& t : terms_)
    if (t.piece.contains(x)) value += t.coeff;
  return value;
}

IndicatorSum IndicatorSum::specialized(const Integer& value) const {
  IndicatorSum r(dim_);
  for (const auto& t : terms_) r.add(IntPoly(t.coeff.at(value)), t.piece);
  return r;
}

LocallyClosedPiece piece_of(const Cone& cone) { return LocallyClosedPiece::make(cone.dim(), cone.constraints()); }

IndicatorSum indicator_of(const Polytope& p) {
  IndicatorSum s(p.dim());
  s.add(1, LocallyClosedPiece::make(p.dim(), p.facets()));
  return s;
}

IndicatorSum interior_indicator(const Polytope& p) {
  IndicatorSum s(p.dim());
  s.add(1, relative_interior(p, p.whole_face()));
  return s;
}

IndicatorSum gram_decomposition(const Polytope& p) {
  IndicatorSum s(p.dim());
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    long sign = p.faces()[f].dim % 2 == 0 ? 1 : -1;
    s.add(sign, piece_of(tangent_cone(p, f)));
  }
  return s;
}

LocallyClosedPiece relative_interior(const Polytope& p, std::size_t face) {
  const Face& f = p.faces().at(face);
  std::vector<Halfspace> cons;
  std::size_t next = 0;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Halfspace& h = p.facets()[i];
    bool tight = next < f.facets.size() && f.facets[next] == i;
    if (tight) {
      ++next;
      cons.push_back(h);
      cons.push_back({negate(h.normal), -h.offset, Sense::Ge});
    } else {
      cons.push_back({h.normal, h.offset, Sense::Gt});
    }
  }
  return LocallyClosedPiece::make(p.dim(), std::move(cons));
}

IndicatorSum weighted_indicator(const Polytope& p) {
  IndicatorSum s(p.dim());
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    unsigned codim = static_cast<unsigned>(p.dim() - p.faces()[f].dim);
    s.add(IntPoly::z().pow(codim), relative_interior(p, f));
  }
  return s;
}

}  // namespace conic
