#include "conic/piece.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace conic {

namespace {

// a . x >= b, or > b when strict.
struct Row {
  RatVector a;
  Rational b;
  bool strict = false;
};

// Rescales rows to primitive integer normals and keeps the strongest of
// each parallel family. Returns false if a constant row is violated.
bool normalize(std::vector<Row>& rows) {
  std::map<IntVector, Row> best;
  for (auto& r : rows) {
    if (is_zero(r.a)) {
      bool ok = r.strict ? Rational(0) > r.b : Rational(0) >= r.b;
      if (!ok) return false;
      continue;
    }
    Halfspace h = Halfspace::make(r.a, r.b);
    Row n{to_rational(h.normal), h.offset, r.strict};
    auto it = best.find(h.normal);
    if (it == best.end()) {
      best.emplace(h.normal, std::move(n));
    } else if (n.b > it->second.b || (n.b == it->second.b && n.strict)) {
      it->second = std::move(n);
    }
  }
  rows.clear();
  for (auto& [k, r] : best) rows.push_back(std::move(r));
  return true;
}

struct Bound {
  std::optional<Rational> value;
  bool strict = false;
};

}  // namespace

std::optional<RatVector> find_point(std::size_t dim, const std::vector<Halfspace>& constraints) {
  std::vector<Row> rows;
  for (const auto& h : constraints) {
    if (h.dim() != dim) throw std::invalid_argument("find_point: dimension mismatch");
    rows.push_back({to_rational(h.normal), h.offset, h.sense == Sense::Gt});
  }
  if (!normalize(rows)) return std::nullopt;

  // stages[k] involves only x_0 .. x_k.
  std::vector<std::vector<Row>> stages(dim);
  for (std::size_t k = dim; k-- > 0;) {
    stages[k] = rows;
    std::vector<Row> next, lower, upper;
    for (auto& r : rows) {
      int s = sign(r.a[k]);
      if (s == 0) next.push_back(r);
      else (s > 0 ? lower : upper).push_back(r);
    }
    for (const auto& p : lower)
      for (const auto& q : upper) {
        Rational sp = 1 / p.a[k], sq = -1 / q.a[k];
        Row c{add(scale(p.a, sp), scale(q.a, sq)), p.b * sp + q.b * sq, p.strict || q.strict};
        c.a[k] = 0;
        next.push_back(std::move(c));
      }
    if (!normalize(next)) return std::nullopt;
    rows = std::move(next);
  }

  RatVector x(dim, Rational(0));
  for (std::size_t k = 0; k < dim; ++k) {
    Bound lo, hi;
    for (const auto& r : stages[k]) {
      int s = sign(r.a[k]);
      if (s == 0) continue;
      Rational rest = r.b;
      for (std::size_t j = 0; j < k; ++j) rest -= r.a[j] * x[j];
      Rational v = rest / r.a[k];
      Bound& b = s > 0 ? lo : hi;
      bool tighter = !b.value || (s > 0 ? v > *b.value : v < *b.value);
      if (tighter) {
        b.value = v;
        b.strict = r.strict;
      } else if (v == *b.value && r.strict) {
        b.strict = true;
      }
    }
    Rational& xk = x[k];
    if (lo.value && hi.value) {
      if (*lo.value > *hi.value) return std::nullopt;
      if (*lo.value == *hi.value) {
        if (lo.strict || hi.strict) return std::nullopt;
        xk = *lo.value;
      } else {
        xk = (*lo.value + *hi.value) / 2;
      }
    } else if (lo.value) {
      xk = lo.strict ? Rational(floor(*lo.value) + 1) : *lo.value;
    } else if (hi.value) {
      xk = hi.strict ? Rational(ceil(*hi.value) - 1) : *hi.value;
    }
  }
  for (const auto& h : constraints) {
    if (!h.contains(x)) throw std::logic_error("find_point: witness violates a constraint");
  }
  return x;
}

LocallyClosedPiece LocallyClosedPiece::make(std::size_t dim, std::vector<Halfspace> constraints) {
  std::map<IntVector, Halfspace> best;
  for (const auto& c : constraints) {
    if (c.dim() != dim) throw std::invalid_argument("LocallyClosedPiece: dimension mismatch");
    Halfspace h = Halfspace::make(c.normal, c.offset, c.sense);
    auto it = best.find(h.normal);
    if (it == best.end()) {
      best.emplace(h.normal, std::move(h));
    } else if (h.offset > it->second.offset || (h.offset == it->second.offset && h.sense == Sense::Gt)) {
      it->second = std::move(h);
    }
  }
  std::vector<Halfspace> canon;
  for (auto& [k, h] : best) canon.push_back(std::move(h));
  std::sort(canon.begin(), canon.end());
  if (!find_point(dim, canon)) throw std::invalid_argument("LocallyClosedPiece: empty set");

  // Drop constraints implied by the rest: c is redundant iff rest and not(c)
  // is infeasible.
  for (std::size_t i = 0; i < canon.size();) {
    std::vector<Halfspace> trial;
    for (std::size_t j = 0; j < canon.size(); ++j)
      if (j != i) trial.push_back(canon[j]);
    trial.push_back(canon[i].complement());
    if (!find_point(dim, trial)) {
      canon.erase(canon.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return LocallyClosedPiece(dim, std::move(canon));
}

LocallyClosedPiece LocallyClosedPiece::whole_space(std::size_t dim) { return LocallyClosedPiece(dim, {}); }

bool LocallyClosedPiece::contains(const RatVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("LocallyClosedPiece::contains: dimension mismatch");
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

bool LocallyClosedPiece::contains(const ScaledPoint& x) const {
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

}  // namespace conic
