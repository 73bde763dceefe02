#include "conic/nonsimple_polar.hpp"

#include <algorithm>

#include "conic/linalg.hpp"

namespace conic {

namespace {

constexpr std::uint64_t kDualHeightSeed = 0xd0a1;

void check_vertex(const Polytope& p, std::size_t vertex) {
  if (vertex >= p.vertices().size()) throw std::invalid_argument("vertex index out of range");
}

std::string describe_cell(const std::vector<std::size_t>& cell) {
  std::string s = "{";
  for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? "," : "") + std::string("n") + std::to_string(cell[i]);
  return s + "}";
}

// Generators of a piece that is a simplicial cone at its apex, if it is one.
std::optional<std::vector<RatVector>> simplicial_generators(const LocallyClosedPiece& piece, const RatVector& apex) {
  const std::size_t d = piece.dim();
  if (piece.constraints().size() != d) return std::nullopt;
  std::vector<IntVector> normals;
  for (const auto& h : piece.constraints()) {
    if (!h.is_tight(apex)) return std::nullopt;
    normals.push_back(h.normal);
  }
  auto inv = inverse(to_rational(IntMatrix::from_rows(normals, d)));
  if (!inv) return std::nullopt;
  std::vector<RatVector> gens;
  for (std::size_t k = 0; k < d; ++k) gens.push_back(inv->column(k));
  return gens;
}

}  // namespace

std::vector<IntVector> normal_rays(const Polytope& p, std::size_t vertex) {
  check_vertex(p, vertex);
  std::vector<IntVector> rays;
  for (auto f : p.tight_facets(vertex)) rays.push_back(p.facets()[f].normal);
  return rays;
}

Cone t_sigma(const Polytope& p, std::size_t vertex, const std::vector<std::size_t>& cell) {
  auto rays = normal_rays(p, vertex);
  if (cell.size() != p.dim()) throw std::invalid_argument("t_sigma: a cell needs exactly d rays");
  std::vector<IntVector> normals;
  for (auto j : cell) {
    if (j >= rays.size()) throw std::invalid_argument("t_sigma: ray index out of range");
    normals.push_back(rays[j]);
  }
  if (rank(normals, p.dim()) != p.dim()) throw std::invalid_argument("t_sigma: dependent cell rays");
  return Cone::from_constraints(p.vertices()[vertex], normals);
}

LocalContribution local_contribution(const Polytope& p, std::size_t vertex, const LiftedTriangulation& tri,
                                     const Functional& xi) {
  const std::size_t d = p.dim();
  if (xi.xi.size() != d) throw std::invalid_argument("functional: dimension mismatch");
  auto rays = normal_rays(p, vertex);
  if (tri.rays != rays) throw std::invalid_argument("local_contribution: triangulation is not of this normal cone");
  const RatVector& v = p.vertices()[vertex];
  LocalContribution lc{vertex, v, xi, {}, IndicatorSum(d)};
  for (const auto& cell : tri.cells) {
    std::vector<IntVector> normals;
    for (auto j : cell) normals.push_back(rays[j]);
    RatMatrix n = to_rational(IntMatrix::from_rows(normals, d));
    RatVector alpha = *solve_linear(n.transposed(), to_rational(xi.xi));
    RatMatrix n_inv = *inverse(n);
    std::vector<Halfspace> cons;
    std::size_t index = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (alpha[i] == 0) {
        throw GenericityError("functional " + to_string(xi.xi) + " is constant on the ray " +
                              to_string(primitive(n_inv.column(i))) + " of the cell " + describe_cell(cell) +
                              " at vertex v" + std::to_string(vertex));
      }
      const Halfspace h = Halfspace::make(normals[i], dot(normals[i], v));
      if (alpha[i] > 0) {
        cons.push_back(h);
      } else {
        cons.push_back({negate(h.normal), -h.offset, Sense::Gt});
        ++index;
      }
    }
    LocallyClosedPiece piece = LocallyClosedPiece::make(d, cons);
    lc.sum.add(index % 2 == 0 ? 1 : -1, piece);
    lc.cells.push_back({cell, std::move(alpha), index, std::move(piece)});
  }
  return lc;
}

IdentityReport delta_invariance_check(const Polytope& p, std::size_t vertex, const Functional& xi,
                                      const LiftedTriangulation& tri1, const LiftedTriangulation& tri2,
                                      const WitnessOptions& options) {
  auto a = local_contribution(p, vertex, tri1, xi);
  auto b = local_contribution(p, vertex, tri2, xi);
  return verify_identity(a.sum, b.sum, options);
}

IdentityReport intersection_check(const Polytope& p, std::size_t vertex, const LiftedTriangulation& tri,
                                  const WitnessOptions& options) {
  std::vector<Cone> cones;
  std::vector<Halfspace> planes;
  for (const auto& cell : tri.cells) {
    cones.push_back(t_sigma(p, vertex, cell));
    for (const auto& h : cones.back().constraints()) planes.push_back(h);
  }
  Cone tangent = vertex_tangent_cone(p, vertex);
  return verify_pointwise(
      p.dim(),
      [&](const RatVector& x) {
        for (const auto& c : cones)
          if (!c.contains(x)) return IntPoly(0);
        return IntPoly(1);
      },
      [&](const RatVector& x) { return IntPoly(tangent.contains(x) ? 1 : 0); }, options, planes);
}

TriangulationMap vertex_triangulations(const Polytope& p, const HeightMap& heights, std::uint64_t seed) {
  for (const auto& [v, h] : heights) {
    check_vertex(p, v);
    if (h.size() != p.tight_facets(v).size()) {
      throw std::invalid_argument("heights for v" + std::to_string(v) + ": expected " +
                                  std::to_string(p.tight_facets(v).size()) + " values (one per tight facet)");
    }
  }
  TriangulationMap out;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    auto rays = normal_rays(p, v);
    auto it = heights.find(v);
    if (it != heights.end()) {
      out.emplace(v, regular_triangulation(rays, it->second));
    } else {
      out.emplace(v, default_triangulation(rays, seed + v));
    }
  }
  return out;
}

ContributionMap local_contributions(const Polytope& p, const TriangulationMap& tris, const Functional& xi) {
  ContributionMap out;
  for (const auto& [v, tri] : tris) out.emplace(v, local_contribution(p, v, tri, xi));
  return out;
}

IndicatorSum sum_of(const ContributionMap& contributions) {
  if (contributions.empty()) throw std::invalid_argument("sum_of: no contributions");
  IndicatorSum s(contributions.begin()->second.sum.dim());
  for (const auto& [v, c] : contributions) s += c.sum;
  return s;
}

IndicatorSum nonsimple_decomposition(const Polytope& p, const Functional& xi, const TriangulationMap& tris) {
  if (tris.size() != p.vertices().size()) {
    throw std::invalid_argument("nonsimple_decomposition: one triangulation per vertex required");
  }
  return sum_of(local_contributions(p, tris, xi));
}

LiftedTriangulation dual_triangulation(const Polytope& p, const std::vector<Rational>& dual_heights) {
  const std::size_t d = p.dim();
  if (!p.in_interior(RatVector(d, Rational(0)))) {
    throw std::invalid_argument("compatible triangulation: the origin must be an interior point (translate first)");
  }
  if (dual_heights.size() != p.facets().size()) {
    throw std::invalid_argument("compatible triangulation: expected " + std::to_string(p.facets().size()) +
                                " dual heights (one per facet)");
  }
  // Dual vertex y_F = n_F / b_F, lifted homogeneously to (y_F, 1).
  std::vector<IntVector> rays;
  std::vector<Rational> heights;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const Halfspace& h = p.facets()[f];
    RatVector point = scale(to_rational(h.normal), 1 / h.offset);
    point.push_back(1);
    IntVector ray = primitive(point);
    Rational factor = Rational(ray.back());
    rays.push_back(std::move(ray));
    heights.push_back(dual_heights[f] * factor);
  }
  return regular_triangulation(rays, heights);
}

TriangulationMap compatible_from_dual(const Polytope& p, const std::vector<Rational>& dual_heights) {
  LiftedTriangulation dual = dual_triangulation(p, dual_heights);
  const std::size_t d = p.dim();
  TriangulationMap out;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const auto& tight = p.tight_facets(v);
    std::vector<std::vector<std::size_t>> restricted;
    for (const auto& cell : dual.cells) {
      std::vector<std::size_t> local;
      for (std::size_t j = 0; j < tight.size(); ++j)
        if (std::binary_search(cell.begin(), cell.end(), tight[j])) local.push_back(j);
      if (local.size() == d) restricted.push_back(std::move(local));
    }
    std::sort(restricted.begin(), restricted.end());
    std::vector<Rational> heights;
    for (auto f : tight) heights.push_back(-p.facets()[f].offset * dual_heights[f]);
    LiftedTriangulation tri = regular_triangulation(normal_rays(p, v), heights);
    if (tri.cells != restricted) {
      throw std::logic_error("compatible_from_dual: restriction at v" + std::to_string(v) +
                             " disagrees with the inherited heights");
    }
    out.emplace(v, std::move(tri));
  }
  return out;
}

std::vector<Rational> default_dual_heights(const Polytope& p, std::uint64_t seed) {
  Rng rng(seed ^ kDualHeightSeed);
  const auto n = p.facets().size();
  const auto bound = static_cast<std::int64_t>(4 * n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> heights;
    for (std::size_t i = 0; i < n; ++i) heights.emplace_back(rng.uniform(0, bound));
    try {
      dual_triangulation(p, heights);
      return heights;
    } catch (const DegenerateHeightsError&) {
    }
  }
  throw DegenerateHeightsError("default_dual_heights: no simplicial heights found");
}

ConicReport positive_conic_check(const ContributionMap& contributions, const Functional& xi, std::size_t samples,
                                 std::uint64_t seed) {
  ConicReport report;
  Rng rng(seed);
  const Rational lambdas[] = {Rational(1, 2), Rational(1), Rational(3)};
  for (const auto& [v, c] : contributions) {
    const std::size_t d = c.apex.size();
    std::vector<RatVector> directions;
    for (std::size_t s = 0; s < samples; ++s) {
      RatVector t(d);
      do {
        for (auto& x : t) x = Rational(rng.uniform(-6, 6));
      } while (is_zero(t));
      directions.push_back(std::move(t));
    }
    for (const auto& term : c.sum.terms()) {
      auto gens = simplicial_generators(term.piece, c.apex);
      if (!gens) continue;
      RatVector total(d, Rational(0));
      for (const auto& g : *gens) total = add(total, g);
      directions.push_back(total);
      for (const auto& g : *gens) directions.push_back(add(total, scale(g, Rational(7))));
    }
    for (const auto& t : directions) {
      ++report.directions_checked;
      IntPoly first = c.sum.evaluate(add(c.apex, scale(t, lambdas[0])));
      for (const auto& lambda : lambdas) {
        RatVector x = add(c.apex, scale(t, lambda));
        IntPoly value = c.sum.evaluate(x);
        if (!(value == first)) {
          report.ok = false;
          report.violation = ConicViolation{v, "conic", t, x, value};
          return report;
        }
      }
      if (xi(t) < 0) {
        RatVector x = add(c.apex, t);
        IntPoly value = c.sum.evaluate(x);
        if (!value.is_zero()) {
          report.ok = false;
          report.violation = ConicViolation{v, "positive", t, x, value};
          return report;
        }
      }
    }
  }
  return report;
}

LocalContribution with_flipped_constraint(const LocalContribution& c, std::size_t term, std::size_t constraint) {
  LocalContribution out = c;
  out.sum = IndicatorSum(c.sum.dim());
  const auto& terms = c.sum.terms();
  if (term >= terms.size()) throw std::invalid_argument("with_flipped_constraint: term out of range");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i != term) {
      out.sum.add(terms[i].coeff, terms[i].piece);
      continue;
    }
    auto cons = terms[i].piece.constraints();
    if (constraint >= cons.size()) throw std::invalid_argument("with_flipped_constraint: constraint out of range");
    cons[constraint] = cons[constraint].complement();
    out.sum.add(terms[i].coeff, LocallyClosedPiece::make(c.sum.dim(), cons));
  }
  return out;
}

UniquenessReport uniqueness_crosscheck(const Polytope& p, const Functional& xi, const ContributionMap& a,
                                       const ContributionMap& b, const WitnessOptions& options) {
  UniquenessReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failure = std::move(why);
    return report;
  };
  if (a.size() != p.vertices().size() || b.size() != p.vertices().size()) {
    return fail("families must have one contribution per vertex");
  }
  const char* names[] = {"first", "second"};
  const ContributionMap* families[] = {&a, &b};
  IndicatorSum target = indicator_of(p);
  for (int k = 0; k < 2; ++k) {
    if (!positive_conic_check(*families[k], xi, 32, options.seed).ok) {
      return fail(std::string(names[k]) + " family fails the positive/conic check");
    }
    report.identity = verify_identity(sum_of(*families[k]), target, options);
    if (!report.identity.ok) return fail(std::string(names[k]) + " family does not sum to the indicator of P");
  }
  for (const auto& [v, ca] : a) {
    auto it = b.find(v);
    if (it == b.end()) return fail("vertex v" + std::to_string(v) + " missing from the second family");
    report.identity = verify_identity(ca.sum, it->second.sum, options);
    if (!report.identity.ok) {
      report.vertex = v;
      return fail("local contributions differ at v" + std::to_string(v));
    }
  }
  return report;
}

}  // namespace conic
