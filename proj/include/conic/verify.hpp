#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conic/indicator.hpp"

namespace conic {

struct Box {
  RatVector lo;
  RatVector hi;
};

// Bounding box of P inflated by 1 in every coordinate.
Box default_box(const Polytope& p);
Box cube_box(std::size_t dim, const Rational& lo, const Rational& hi);

struct WitnessOptions {
  Box box;
  Rational step = Rational(1, 2);
  std::size_t extra_samples = 200;
  std::uint64_t seed = 1;
  // Additionally evaluate at one witness point in every face of the
  // hyperplane arrangement spanned by the constraints involved.
  bool exact_cells = false;
};

WitnessOptions default_witnesses(const Polytope& p);

struct Counterexample {
  RatVector point;
  IntPoly lhs;
  IntPoly rhs;
};

struct IdentityReport {
  bool ok = true;
  std::size_t points_checked = 0;
  std::optional<Counterexample> counterexample;
};

using PointFunction = std::function<IntPoly(const RatVector&)>;

// Grid points lo + k * step inside the box, in lexicographic order (first
// coordinate slowest), then `extra_samples` seeded random rational points.
// The callback returns false to stop early.
void for_each_witness(std::size_t dim, const WitnessOptions& options,
                      const std::function<bool(const RatVector&)>& visit);

// One point in the relative interior of every nonempty face of the
// arrangement of the given hyperplanes (senses ignored).
std::vector<RatVector> arrangement_witnesses(std::size_t dim, const std::vector<Halfspace>& hyperplanes);

IdentityReport verify_pointwise(std::size_t dim, const PointFunction& lhs, const PointFunction& rhs,
                                const WitnessOptions& options, const std::vector<Halfspace>& hyperplanes = {});

IdentityReport verify_identity(const IndicatorSum& lhs, const IndicatorSum& rhs, const WitnessOptions& options);

std::vector<Halfspace> hyperplanes_of(const IndicatorSum& s);

}  // namespace conic
