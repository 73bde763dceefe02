#include "conic/simple_polar.hpp"

#include <algorithm>

#include "conic/linalg.hpp"

namespace conic {

namespace {

std::string vertex_name(const Polytope& p, std::size_t v) {
  return "v" + std::to_string(v) + " = " + to_string(p.vertices()[v]);
}

Halfspace flipped(const Halfspace& h) { return {negate(h.normal), -h.offset, Sense::Gt}; }

// Constraints of T^xi_v P from the signs of alpha.
std::vector<Halfspace> polarized_constraints(const Polytope& p, const VertexPolarization& pol) {
  std::vector<Halfspace> cons;
  for (std::size_t i = 0; i < pol.facets.size(); ++i) {
    const Halfspace& h = p.facets()[pol.facets[i]];
    cons.push_back(pol.alpha[i] > 0 ? h : flipped(h));
  }
  return cons;
}

}  // namespace

Functional::Functional(IntVector v) : xi(std::move(v)) {
  if (is_zero(xi)) throw std::invalid_argument("functional must be nonzero");
}

bool is_generic(const Functional& xi, const Polytope& p) {
  if (xi.xi.size() != p.dim()) throw std::invalid_argument("functional: dimension mismatch");
  for (auto [a, b] : p.edges())
    if (xi(subtract(p.vertices()[a], p.vertices()[b])) == 0) return false;
  return true;
}

Functional random_generic_functional(const Polytope& p, Rng& rng) {
  IntVector v(p.dim());
  while (true) {
    for (auto& x : v) x = rng.uniform(-9, 9);
    if (is_zero(v)) continue;
    Functional xi(v);
    if (is_generic(xi, p)) return xi;
  }
}

VertexPolarization polarize(const Polytope& p, std::size_t vertex, const Functional& xi) {
  const std::size_t d = p.dim();
  if (xi.xi.size() != d) throw std::invalid_argument("functional: dimension mismatch");
  if (!is_simple_vertex(p, vertex)) {
    throw NotSimpleError("vertex " + vertex_name(p, vertex) +
                         " is not simple; use the nonsimple method (triangulated normal cones)");
  }
  VertexPolarization pol;
  pol.vertex = vertex;
  pol.facets = p.tight_facets(vertex);
  std::vector<IntVector> normals;
  for (auto f : pol.facets) normals.push_back(p.facets()[f].normal);
  RatMatrix n = to_rational(IntMatrix::from_rows(normals, d));
  RatMatrix n_inv = *inverse(n);
  pol.alpha = *solve_linear(n.transposed(), to_rational(xi.xi));
  for (std::size_t i = 0; i < d; ++i) {
    IntVector t = primitive(n_inv.column(i));
    Integer value = xi(t);
    if (value == 0) {
      throw GenericityError("functional " + to_string(xi.xi) + " is constant on the edge at " +
                            vertex_name(p, vertex) + " with direction " + to_string(t));
    }
    pol.signs.push_back(value > 0 ? 1 : -1);
    pol.edges.push_back(std::move(t));
  }
  pol.index = static_cast<std::size_t>(std::count(pol.signs.begin(), pol.signs.end(), -1));
  std::size_t negative_alpha = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if ((pol.alpha[i] < 0) != (pol.signs[i] < 0)) throw std::logic_error("polarize: alpha and edge signs disagree");
    negative_alpha += pol.alpha[i] < 0;
  }
  if (negative_alpha != pol.index) throw std::logic_error("polarize: index definitions disagree");
  return pol;
}

LocallyClosedPiece polarized_tangent_cone(const Polytope& p, std::size_t vertex, const Functional& xi) {
  const std::size_t d = p.dim();
  VertexPolarization pol = polarize(p, vertex, xi);
  LocallyClosedPiece by_facets = LocallyClosedPiece::make(d, polarized_constraints(p, pol));

  // v + sum of Q>=0 t_i (xi(t_i) > 0) and Q<0 t_i (xi(t_i) < 0).
  std::vector<IntVector> dirs;
  for (std::size_t i = 0; i < d; ++i) dirs.push_back(pol.signs[i] > 0 ? pol.edges[i] : negate(pol.edges[i]));
  RatMatrix dual = *inverse(to_rational(IntMatrix::from_columns(dirs, d)));
  const RatVector& v = p.vertices()[vertex];
  std::vector<Halfspace> cons;
  for (std::size_t i = 0; i < d; ++i) {
    RatVector eta = dual.row(i);
    cons.push_back(Halfspace::make(eta, dot(eta, v), pol.signs[i] > 0 ? Sense::Ge : Sense::Gt));
  }
  LocallyClosedPiece by_edges = LocallyClosedPiece::make(d, cons);
  if (!(by_facets == by_edges)) throw std::logic_error("polarized_tangent_cone: constructions disagree");
  return by_facets;
}

IndicatorSum lv_decomposition(const Polytope& p, const Functional& xi) {
  if (!is_simple(p)) {
    throw NotSimpleError("polytope is not simple; the plain polar decomposition needs simple vertices, "
                         "use the nonsimple method instead");
  }
  IndicatorSum s(p.dim());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    VertexPolarization pol = polarize(p, v, xi);
    s.add(pol.index % 2 == 0 ? 1 : -1, polarized_tangent_cone(p, v, xi));
  }
  return s;
}

IntPoly weighted_polarized_piece_value(const VertexPolarization& pol, const std::vector<std::size_t>& equalities) {
  IntPoly value = 1;
  for (auto i : equalities) {
    if (i >= pol.alpha.size()) throw std::invalid_argument("weighted value: equality index out of range");
    value *= pol.alpha[i] > 0 ? IntPoly::z() : IntPoly(1) - IntPoly::z();
  }
  return value;
}

IndicatorSum weighted_lv_decomposition(const Polytope& p, const Functional& xi) {
  if (!is_simple(p)) {
    throw NotSimpleError("polytope is not simple; the weighted polar decomposition needs simple vertices");
  }
  const std::size_t d = p.dim();
  IndicatorSum s(d);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    VertexPolarization pol = polarize(p, v, xi);
    long sign = pol.index % 2 == 0 ? 1 : -1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::vector<std::size_t> eq;
      std::vector<Halfspace> cons;
      for (std::size_t i = 0; i < d; ++i) {
        const Halfspace& h = p.facets()[pol.facets[i]];
        if (mask >> i & 1) {
          eq.push_back(i);
          cons.push_back(h);
          cons.push_back({negate(h.normal), -h.offset, Sense::Ge});
        } else if (pol.alpha[i] > 0) {
          cons.push_back({h.normal, h.offset, Sense::Gt});
        } else {
          cons.push_back(flipped(h));
        }
      }
      s.add(weighted_polarized_piece_value(pol, eq) * IntPoly(sign), LocallyClosedPiece::make(d, cons));
    }
  }
  return s;
}

std::pair<IndicatorSum, IndicatorSum> rearrange_for_vertex(const Polytope& p, std::size_t vertex,
                                                           const Functional& xi) {
  IndicatorSum lhs(p.dim()), rhs(p.dim());
  VertexPolarization pol = polarize(p, vertex, xi);
  lhs.add(pol.index % 2 == 0 ? 1 : -1, polarized_tangent_cone(p, vertex, xi));
  Rational at_v = xi(p.vertices()[vertex]);
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    const Face& face = p.faces()[f];
    if (!std::binary_search(face.vertices.begin(), face.vertices.end(), vertex)) continue;
    bool maximal = true;
    for (auto w : face.vertices)
      if (w != vertex && xi(p.vertices()[w]) >= at_v) maximal = false;
    if (maximal) rhs.add(face.dim % 2 == 0 ? 1 : -1, piece_of(tangent_cone(p, f)));
  }
  return {lhs, rhs};
}

std::vector<LocallyClosedPiece> sign_pattern_pieces(const Polytope& p, std::size_t vertex) {
  if (!is_simple_vertex(p, vertex)) throw NotSimpleError("sign patterns need a simple vertex");
  const auto& facets = p.tight_facets(vertex);
  const std::size_t d = p.dim();
  std::vector<LocallyClosedPiece> pieces;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<Halfspace> cons;
    for (std::size_t i = 0; i < d; ++i) {
      const Halfspace& h = p.facets()[facets[i]];
      cons.push_back(mask >> i & 1 ? flipped(h) : h);
    }
    pieces.push_back(LocallyClosedPiece::make(d, cons));
  }
  return pieces;
}

IdentityReport partition_check(const Polytope& p, std::size_t vertex, const WitnessOptions& options) {
  auto pieces = sign_pattern_pieces(p, vertex);
  IndicatorSum all(p.dim());
  std::vector<Halfspace> planes;
  for (const auto& piece : pieces) {
    all.add(1, piece);
    for (const auto& h : piece.constraints()) planes.push_back(h);
  }
  return verify_pointwise(
      p.dim(), [&](const RatVector& x) { return all.evaluate(x); }, [](const RatVector&) { return IntPoly(1); },
      options, options.exact_cells ? planes : std::vector<Halfspace>{});
}

}  // namespace conic
