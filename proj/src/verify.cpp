#include "conic/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace conic {

Box default_box(const Polytope& p) {
  auto [lo, hi] = p.bounding_box();
  for (auto& x : lo) x -= 1;
  for (auto& x : hi) x += 1;
  return {lo, hi};
}

Box cube_box(std::size_t dim, const Rational& lo, const Rational& hi) {
  return {RatVector(dim, lo), RatVector(dim, hi)};
}

WitnessOptions default_witnesses(const Polytope& p) {
  WitnessOptions o;
  o.box = default_box(p);
  return o;
}

void for_each_witness(std::size_t dim, const WitnessOptions& options,
                      const std::function<bool(const RatVector&)>& visit) {
  const Box& box = options.box;
  if (box.lo.size() != dim || box.hi.size() != dim) throw std::invalid_argument("witness box: dimension mismatch");
  if (options.step <= 0) throw std::invalid_argument("witness grid: step must be positive");

  std::vector<std::size_t> counts(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (box.hi[i] < box.lo[i]) throw std::invalid_argument("witness box: empty");
    Rational span = (box.hi[i] - box.lo[i]) / options.step;
    counts[i] = floor(span).get_ui() + 1;
  }
  std::vector<std::size_t> k(dim, 0);
  RatVector x = box.lo;
  while (true) {
    if (!visit(x)) return;
    bool done = true;
    for (std::size_t i = dim; i-- > 0;) {
      if (++k[i] < counts[i]) {
        x[i] = box.lo[i] + options.step * Rational(k[i]);
        done = false;
        break;
      }
      k[i] = 0;
      x[i] = box.lo[i];
    }
    if (done) break;
  }

  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.extra_samples; ++s) {
    RatVector p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::int64_t den = rng.uniform(1, 12);
      Integer lo = ceil(box.lo[i] * den), hi = floor(box.hi[i] * den);
      if (lo > hi) {
        p[i] = box.lo[i];
        continue;
      }
      std::int64_t num = rng.uniform(lo.get_si(), hi.get_si());
      p[i] = Rational(num, den);
      p[i].canonicalize();
    }
    if (!visit(p)) return;
  }
}

std::vector<RatVector> arrangement_witnesses(std::size_t dim, const std::vector<Halfspace>& hyperplanes) {
  std::vector<Halfspace> planes;
  for (const auto& h : hyperplanes) {
    Halfspace c = Halfspace::make(h.normal, h.offset);
    std::size_t k = 0;
    while (c.normal[k] == 0) ++k;
    if (c.normal[k] < 0) c = {negate(c.normal), -c.offset, Sense::Ge};
    if (std::find(planes.begin(), planes.end(), c) == planes.end()) planes.push_back(c);
  }

  struct Cell {
    std::vector<Halfspace> constraints;
    RatVector witness;
  };
  std::vector<Cell> cells{{{}, RatVector(dim, Rational(0))}};
  for (const auto& h : planes) {
    std::vector<Cell> next;
    for (const auto& cell : cells) {
      int here = sign(h.slack(cell.witness));
      const std::vector<std::vector<Halfspace>> sides = {
          {{h.normal, h.offset, Sense::Gt}},
          {h, {negate(h.normal), -h.offset, Sense::Ge}},
          {{negate(h.normal), -h.offset, Sense::Gt}},
      };
      for (int side = 0; side < 3; ++side) {
        Cell c{cell.constraints, cell.witness};
        c.constraints.insert(c.constraints.end(), sides[side].begin(), sides[side].end());
        if (here != 1 - side) {
          auto w = find_point(dim, c.constraints);
          if (!w) continue;
          c.witness = std::move(*w);
        }
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  std::vector<RatVector> out;
  for (auto& c : cells) out.push_back(std::move(c.witness));
  return out;
}

IdentityReport verify_pointwise(std::size_t dim, const PointFunction& lhs, const PointFunction& rhs,
                                const WitnessOptions& options, const std::vector<Halfspace>& hyperplanes) {
  IdentityReport report;
  auto check = [&](const RatVector& x) {
    ++report.points_checked;
    IntPoly a = lhs(x), b = rhs(x);
    if (a == b) return true;
    report.ok = false;
    report.counterexample = Counterexample{x, std::move(a), std::move(b)};
    return false;
  };
  for_each_witness(dim, options, check);
  if (report.ok && options.exact_cells) {
    for (const auto& w : arrangement_witnesses(dim, hyperplanes))
      if (!check(w)) break;
  }
  return report;
}

std::vector<Halfspace> hyperplanes_of(const IndicatorSum& s) {
  std::vector<Halfspace> out;
  for (const auto& t : s.terms())
    for (const auto& h : t.piece.constraints()) out.push_back(h);
  return out;
}

IdentityReport verify_identity(const IndicatorSum& lhs, const IndicatorSum& rhs, const WitnessOptions& options) {
  if (lhs.dim() != rhs.dim()) throw std::invalid_argument("verify_identity: dimension mismatch");
  auto planes = hyperplanes_of(lhs);
  auto more = hyperplanes_of(rhs);
  planes.insert(planes.end(), more.begin(), more.end());
  return verify_pointwise(
      lhs.dim(), [&](const RatVector& x) { return lhs.evaluate(x); }, [&](const RatVector& x) { return rhs.evaluate(x); },
      options, planes);
}

}  // namespace conic
