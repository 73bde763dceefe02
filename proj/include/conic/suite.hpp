#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conic/corpus.hpp"

namespace conic {

struct CheckResult {
  std::string entry;
  std::string check;
  bool ok = true;
  std::size_t points = 0;
  std::string detail;  // first failure, if any
};

// Seeded random functional that is generic for every cell of every given
// triangulation family (which includes edge genericity at simple vertices).
Functional generic_functional(const Polytope& p, const std::vector<TriangulationMap>& families, Rng& rng);

// Distinct regular triangulations of a normal cone found among seeded
// random height draws, at most `wanted`.
std::vector<LiftedTriangulation> distinct_triangulations(const std::vector<IntVector>& rays, std::size_t wanted,
                                                         std::uint64_t seed);

// `count` triangulation families; family k uses the k-th distinct
// triangulation (cyclically) at each non-simple vertex.
std::vector<TriangulationMap> height_choices(const Polytope& p, std::size_t count, std::uint64_t seed);

std::string describe(const IdentityReport& r);

CheckResult check_count(const CorpusEntry& e);
CheckResult check_gram(const CorpusEntry& e, std::uint64_t seed);
// Polar decomposition for `functionals` generic xi, plus rearrangement at every vertex,
// the sign-pattern partition at every vertex and the positive/conic check.
CheckResult check_lv(const CorpusEntry& e, std::size_t functionals, std::uint64_t seed);
// Weighted identity and its z = 1, z = 0 specializations.
CheckResult check_weighted(const CorpusEntry& e, std::uint64_t seed);
// Sum of local contributions for `functionals` xi and `choices` height
// families; Delta-invariance across families, the cell intersection
// identity and the positive/conic check.
CheckResult check_nonsimple(const CorpusEntry& e, std::size_t functionals, std::size_t choices, std::uint64_t seed);
// Compatible triangulations from the polar dual of the centered polytope,
// and per-vertex agreement with ad-hoc triangulations.
CheckResult check_compatible(const CorpusEntry& e, std::uint64_t seed);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t functionals = 5;
};

// Every applicable check on every entry, in corpus order.
std::vector<CheckResult> run_suite(const std::vector<CorpusEntry>& entries, const SuiteOptions& options);

}  // namespace conic
