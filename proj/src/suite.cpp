#include "conic/suite.hpp"

#include <algorithm>

namespace conic {

namespace {

bool tagged(const CorpusEntry& e, const std::string& tag) {
  return std::find(e.tags.begin(), e.tags.end(), tag) != e.tags.end();
}

WitnessOptions witnesses(const Polytope& p, std::uint64_t seed) {
  WitnessOptions o = default_witnesses(p);
  o.seed = seed;
  return o;
}

// Records the first failure; returns false once something failed.
struct Recorder {
  CheckResult& result;
  bool identity(const IdentityReport& r, const std::string& what) {
    result.points += r.points_checked;
    if (r.ok) return true;
    result.ok = false;
    result.detail = what + ": " + describe(r);
    return false;
  }
  CheckResult fail(const std::string& what) {
    result.ok = false;
    result.detail = what;
    return result;
  }
};

std::string xi_text(const Functional& xi) { return "xi=" + to_string(xi.xi); }

}  // namespace

std::string describe(const IdentityReport& r) {
  if (r.ok) return "ok (" + std::to_string(r.points_checked) + " points)";
  if (!r.counterexample) return "failed";
  const auto& c = *r.counterexample;
  return "mismatch at " + to_string(c.point) + ": " + c.lhs.to_string() + " vs " + c.rhs.to_string();
}

Functional generic_functional(const Polytope& p, const std::vector<TriangulationMap>& families, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Functional xi = random_generic_functional(p, rng);
    try {
      for (const auto& f : families) local_contributions(p, f, xi);
      return xi;
    } catch (const GenericityError&) {
    }
  }
  throw std::logic_error("generic_functional: no generic functional found");
}

std::vector<LiftedTriangulation> distinct_triangulations(const std::vector<IntVector>& rays, std::size_t wanted,
                                                         std::uint64_t seed) {
  std::vector<LiftedTriangulation> out;
  for (std::uint64_t draw = 0; draw < 64 && out.size() < wanted; ++draw) {
    LiftedTriangulation t = default_triangulation(rays, seed * 1000 + draw);
    bool fresh = std::none_of(out.begin(), out.end(), [&](const LiftedTriangulation& u) { return u.cells == t.cells; });
    if (fresh) out.push_back(std::move(t));
    if (rays.size() == rays[0].size()) break;
  }
  return out;
}

std::vector<TriangulationMap> height_choices(const Polytope& p, std::size_t count, std::uint64_t seed) {
  std::vector<TriangulationMap> families(count);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    auto options = distinct_triangulations(normal_rays(p, v), count, seed + v);
    for (std::size_t k = 0; k < count; ++k) families[k].emplace(v, options[k % options.size()]);
  }
  return families;
}

CheckResult check_count(const CorpusEntry& e) {
  CheckResult r{e.name, "count", true, 0, ""};
  Integer brion = count_lattice_points(brion_gf(e.polytope));
  Integer brute(static_cast<unsigned long>(lattice_points(e.polytope).size()));
  r.points = 1;
  if (brion != brute || brion != e.expected_count) {
    r.ok = false;
    r.detail = "brion " + to_string(brion) + ", brute force " + to_string(brute) + ", expected " +
               to_string(e.expected_count);
  }
  return r;
}

CheckResult check_gram(const CorpusEntry& e, std::uint64_t seed) {
  CheckResult r{e.name, "gram", true, 0, ""};
  Recorder rec{r};
  rec.identity(verify_identity(gram_decomposition(e.polytope), indicator_of(e.polytope), witnesses(e.polytope, seed)),
               "Brianchon-Gram");
  return r;
}

CheckResult check_lv(const CorpusEntry& e, std::size_t functionals, std::uint64_t seed) {
  CheckResult r{e.name, "lv", true, 0, ""};
  Recorder rec{r};
  const Polytope& p = e.polytope;
  WitnessOptions o = witnesses(p, seed);
  Rng rng(seed);
  for (std::size_t k = 0; k < functionals; ++k) {
    Functional xi = random_generic_functional(p, rng);
    if (!rec.identity(verify_identity(lv_decomposition(p, xi), indicator_of(p), o), "polar " + xi_text(xi))) return r;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      auto [lhs, rhs] = rearrange_for_vertex(p, v, xi);
      if (!rec.identity(verify_identity(lhs, rhs, o), "rearrangement v" + std::to_string(v) + " " + xi_text(xi))) {
        return r;
      }
    }
    auto family = local_contributions(p, vertex_triangulations(p, {}, seed), xi);
    ConicReport pc = positive_conic_check(family, xi, 32, seed + k);
    r.points += pc.directions_checked;
    if (!pc.ok) return rec.fail("positive/conic " + xi_text(xi) + " at v" + std::to_string(pc.violation->vertex));
  }
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (!rec.identity(partition_check(p, v, o), "partition v" + std::to_string(v))) return r;
  }
  return r;
}

CheckResult check_weighted(const CorpusEntry& e, std::uint64_t seed) {
  CheckResult r{e.name, "weighted", true, 0, ""};
  Recorder rec{r};
  const Polytope& p = e.polytope;
  WitnessOptions o = witnesses(p, seed);
  Rng rng(seed);
  Functional xi = random_generic_functional(p, rng);
  IndicatorSum w = weighted_lv_decomposition(p, xi);
  if (!rec.identity(verify_identity(w, weighted_indicator(p), o), "weighted " + xi_text(xi))) return r;
  if (!rec.identity(verify_identity(w.specialized(1), indicator_of(p), o), "z=1 " + xi_text(xi))) return r;
  if (!rec.identity(verify_identity(w.specialized(1), lv_decomposition(p, xi), o), "z=1 vs polar " + xi_text(xi))) {
    return r;
  }
  rec.identity(verify_identity(w.specialized(0), interior_indicator(p), o), "z=0 " + xi_text(xi));
  return r;
}

CheckResult check_nonsimple(const CorpusEntry& e, std::size_t functionals, std::size_t choices, std::uint64_t seed) {
  CheckResult r{e.name, "nonsimple", true, 0, ""};
  Recorder rec{r};
  const Polytope& p = e.polytope;
  WitnessOptions o = witnesses(p, seed);
  auto families = height_choices(p, choices, seed);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    if (!families[0].at(v).verify_certificates()) return rec.fail("bad certificate at v" + std::to_string(v));
    if (!rec.identity(intersection_check(p, v, families[0].at(v), o), "cell intersection v" + std::to_string(v))) {
      return r;
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < functionals; ++k) {
    Functional xi = generic_functional(p, families, rng);
    std::vector<ContributionMap> contribs;
    for (std::size_t c = 0; c < families.size(); ++c) {
      contribs.push_back(local_contributions(p, families[c], xi));
      std::string what = "sum of local contributions, family " + std::to_string(c) + " " + xi_text(xi);
      if (!rec.identity(verify_identity(sum_of(contribs.back()), indicator_of(p), o), what)) return r;
      ConicReport pc = positive_conic_check(contribs.back(), xi, 32, seed + k);
      r.points += pc.directions_checked;
      if (!pc.ok) return rec.fail("positive/conic " + xi_text(xi) + " at v" + std::to_string(pc.violation->vertex));
    }
    for (std::size_t c = 1; c < contribs.size(); ++c) {
      for (const auto& [v, lc] : contribs[0]) {
        std::string what = "Delta-invariance v" + std::to_string(v) + " " + xi_text(xi);
        if (!rec.identity(verify_identity(lc.sum, contribs[c].at(v).sum, o), what)) return r;
      }
    }
  }
  return r;
}

CheckResult check_compatible(const CorpusEntry& e, std::uint64_t seed) {
  CheckResult r{e.name, "compatible", true, 0, ""};
  Recorder rec{r};
  Polytope p = center_at_barycenter(e.polytope).polytope;
  WitnessOptions o = witnesses(p, seed);
  TriangulationMap compatible = compatible_from_dual(p, default_dual_heights(p, seed));
  for (const auto& [v, tri] : compatible)
    if (!tri.verify_certificates()) return rec.fail("inherited certificate fails at v" + std::to_string(v));
  auto adhoc = height_choices(p, 1, seed + 17)[0];
  Rng rng(seed);
  Functional xi = generic_functional(p, {compatible, adhoc}, rng);
  auto a = local_contributions(p, compatible, xi);
  if (!rec.identity(verify_identity(sum_of(a), indicator_of(p), o), "compatible sum " + xi_text(xi))) return r;
  UniquenessReport u = uniqueness_crosscheck(p, xi, a, local_contributions(p, adhoc, xi), o);
  r.points += u.identity.points_checked;
  if (!u.ok) return rec.fail("uniqueness: " + u.failure + (u.identity.ok ? "" : " " + describe(u.identity)));
  return r;
}

std::vector<CheckResult> run_suite(const std::vector<CorpusEntry>& entries, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& e : entries) {
    out.push_back(check_count(e));
    out.push_back(check_gram(e, options.seed));
    if (tagged(e, "simple")) {
      out.push_back(check_lv(e, options.functionals, options.seed));
      out.push_back(check_weighted(e, options.seed));
    }
    out.push_back(check_nonsimple(e, std::min<std::size_t>(options.functionals, 3), 2, options.seed));
  }
  return out;
}

}  // namespace conic
