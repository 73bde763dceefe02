#include "conic/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "conic/linalg.hpp"
#include "conic/triangulation.hpp"

namespace conic {

namespace {

constexpr std::uint64_t kTriangulationSeed = 0x7a11;

bool lex_negative(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return x < 0;
  return false;
}

std::string monomial(const IntVector& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += a.size() == 1 ? "x" : "z" + std::to_string(i + 1);
    if (a[i] != 1) s += "^" + conic::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

// Truncated power series in s with rational coefficients.
using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b) {
  Series c(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// B_0, ..., B_n with B_1 = -1/2, so that u/(e^u - 1) = sum B_n u^n / n!.
std::vector<Rational> bernoulli(std::size_t n) {
  std::vector<Rational> b(n + 1, Rational(0));
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -acc / Rational(binom);
  }
  return b;
}

// Coefficients of s^j, j = -k .. max_order, of the term under z = exp(s lambda),
// where k is the number of denominators.
std::vector<Rational> laurent_coefficients(const GFTerm& t, const IntVector& lambda, std::size_t max_order) {
  const std::size_t k = t.denominators.size();
  const std::size_t n = k + max_order;
  std::vector<Rational> fact(n + 1);
  fact[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * Rational(static_cast<long>(i));

  Series numer(n + 1, Rational(0));
  for (const auto& a : t.numerator) {
    Rational alpha(dot(lambda, a));
    Rational power = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      numer[j] += power / fact[j];
      power *= alpha;
    }
  }
  auto bern = bernoulli(n);
  Rational prefactor = t.coeff;
  Series product = numer;
  for (const auto& b : t.denominators) {
    Rational beta(dot(lambda, b));
    if (beta == 0) throw std::logic_error("laurent_coefficients: direction orthogonal to a denominator");
    prefactor *= -1 / beta;
    Series todd(n + 1);
    Rational power = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      todd[j] = bern[j] * power / fact[j];
      power *= beta;
    }
    product = multiply(product, todd);
  }
  for (auto& c : product) c *= prefactor;
  return product;
}

bool avoids_denominators(const IntVector& lambda, const std::vector<const RationalGF*>& gfs) {
  for (const auto* g : gfs)
    for (const auto& t : g->terms())
      for (const auto& b : t.denominators)
        if (dot(lambda, b) == 0) return false;
  return true;
}

Rational power(const Rational& base, const Integer& exponent) {
  Integer e = abs(exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e.get_ui());
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e.get_ui());
  Rational r(num, den);
  r.canonicalize();
  return exponent < 0 ? 1 / r : r;
}

Rational monomial_value(const RatVector& z, const IntVector& a) {
  Rational v = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) v *= power(z[i], a[i]);
  return v;
}

}  // namespace

void RationalGF::add_term(GFTerm term) {
  for (auto& b : term.denominators) {
    if (b.size() != dim_) throw std::invalid_argument("GF term: dimension mismatch");
    if (is_zero(b)) throw std::invalid_argument("GF term: zero denominator exponent");
    if (lex_negative(b)) {
      term.coeff = -term.coeff;
      for (auto& a : term.numerator) a = add(a, negate(b));
      b = negate(b);
    }
  }
  for (const auto& a : term.numerator)
    if (a.size() != dim_) throw std::invalid_argument("GF term: dimension mismatch");
  if (term.coeff == 0 || term.numerator.empty()) return;
  std::sort(term.numerator.begin(), term.numerator.end());
  terms_.push_back(std::move(term));
}

RationalGF& RationalGF::operator+=(const RationalGF& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("RationalGF: dimension mismatch");
  for (const auto& t : other.terms_) terms_.push_back(t);
  return *this;
}

RationalGF RationalGF::operator-() const {
  RationalGF r(dim_);
  for (auto t : terms_) {
    t.coeff = -t.coeff;
    r.terms_.push_back(std::move(t));
  }
  return r;
}

std::string RationalGF::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const GFTerm& t = terms_[i];
    bool negative = t.coeff < 0;
    if (i == 0) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    Rational mag = abs(t.coeff);
    if (mag != 1) s += conic::to_string(mag) + "*";
    if (t.numerator.size() == 1) {
      s += monomial(t.numerator[0]);
    } else {
      s += "(";
      for (std::size_t j = 0; j < t.numerator.size(); ++j) s += (j ? "+" : "") + monomial(t.numerator[j]);
      s += ")";
    }
    if (t.denominators.empty()) continue;
    s += "/";
    if (t.denominators.size() > 1) s += "(";
    for (std::size_t j = 0; j < t.denominators.size(); ++j) {
      s += (j ? "*" : "") + std::string("(1-") + monomial(t.denominators[j]) + ")";
    }
    if (t.denominators.size() > 1) s += ")";
  }
  return s;
}

std::vector<IntVector> enumerate_parallelepiped(const std::vector<IntVector>& generators, const RatVector& apex,
                                                const std::vector<bool>& open) {
  const std::size_t d = apex.size();
  if (generators.size() != d || open.size() != d) {
    throw std::invalid_argument("enumerate_parallelepiped: need d generators and d flags");
  }
  IntMatrix t = IntMatrix::from_columns(generators, d);
  if (determinant(t) == 0) throw std::invalid_argument("enumerate_parallelepiped: dependent generators");
  RatMatrix t_rat = to_rational(t);
  RatMatrix t_inv = *inverse(t_rat);

  // Cosets of t Z^d are represented by U^{-1} k, 0 <= k_i < d_i.
  SmithForm snf = smith_normal_form(t);
  IntMatrix u_inv = unimodular_inverse(snf.u);
  std::vector<Integer> diag(d);
  for (std::size_t i = 0; i < d; ++i) diag[i] = snf.d(i, i);

  std::vector<IntVector> points;
  IntVector k(d, Integer(0));
  while (true) {
    RatVector rep = to_rational(u_inv * k);
    RatVector lambda = t_inv * subtract(rep, apex);
    for (std::size_t i = 0; i < d; ++i) {
      lambda[i] = open[i] ? Rational(lambda[i] - Rational(ceil(lambda[i])) + 1)
                          : Rational(lambda[i] - Rational(floor(lambda[i])));
    }
    points.push_back(to_integer(add(apex, t_rat * lambda)));

    std::size_t i = 0;
    while (i < d) {
      if (++k[i] < diag[i]) break;
      k[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  std::sort(points.begin(), points.end());
  return points;
}

RationalGF gf_simplicial_cone(const RatVector& apex, const std::vector<IntVector>& generators,
                              const std::vector<bool>& open) {
  RationalGF g(apex.size());
  std::vector<IntVector> dens;
  for (const auto& t : generators) dens.push_back(primitive(t));
  g.add_term({Rational(1), enumerate_parallelepiped(dens, apex, open), dens});
  return g;
}

std::vector<Cone> triangulate_cone(const Cone& cone) {
  std::vector<Cone> out;
  for (const auto& cell : half_open_triangulation(cone)) {
    out.push_back(Cone::from_generators(cell.apex, cell.generators));
  }
  return out;
}

std::vector<HalfOpenCell> half_open_triangulation(const Cone& cone) {
  if (!cone.is_pointed()) throw std::invalid_argument("triangulate_cone: cone contains a line");
  const std::size_t d = cone.dim();
  const auto& rays = cone.rays();
  if (rays.size() == d) return {{cone.apex(), rays, std::vector<bool>(d, false)}};

  LiftedTriangulation tri = default_triangulation(rays, kTriangulationSeed);
  // Inner facet normals of each cell are the rows of its inverse generator matrix.
  std::vector<RatMatrix> duals;
  for (const auto& cell : tri.cells) {
    std::vector<IntVector> gens;
    for (auto j : cell) gens.push_back(rays[j]);
    duals.push_back(*inverse(to_rational(IntMatrix::from_columns(gens, d))));
  }
  Rng rng(kTriangulationSeed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RatVector q(d, Rational(0));
    for (const auto& r : rays) q = add(q, scale(to_rational(r), Rational(rng.uniform(1, 1000))));
    bool generic = true;
    std::vector<HalfOpenCell> cells;
    for (std::size_t c = 0; c < tri.cells.size() && generic; ++c) {
      RatVector eta_q = duals[c] * q;
      HalfOpenCell cell{cone.apex(), {}, {}};
      for (std::size_t i = 0; i < d; ++i) {
        if (eta_q[i] == 0) {
          generic = false;
          break;
        }
        cell.generators.push_back(rays[tri.cells[c][i]]);
        cell.open.push_back(eta_q[i] < 0);
      }
      cells.push_back(std::move(cell));
    }
    if (generic) return cells;
  }
  throw std::logic_error("half_open_triangulation: no generic interior vector found");
}

RationalGF gf_cone(const Cone& cone) {
  RationalGF g(cone.dim());
  if (!cone.is_pointed()) return g;
  for (const auto& cell : half_open_triangulation(cone)) g += gf_simplicial_cone(cell.apex, cell.generators, cell.open);
  return g;
}

RationalGF brion_gf(const Polytope& p) {
  RationalGF g(p.dim());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) g += gf_cone(vertex_tangent_cone(p, v));
  return g;
}

RationalGF gram_gf(const Polytope& p) {
  RationalGF g(p.dim());
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    RationalGF part = gf_cone(tangent_cone(p, f));
    g += p.faces()[f].dim % 2 == 0 ? part : -part;
  }
  return g;
}

Integer count_lattice_points(const RationalGF& g) {
  IntVector lambda;
  for (long t = 1;; ++t) {
    lambda.assign(g.dim(), Integer(0));
    Integer power = 1;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      lambda[i] = power;
      power *= t;
    }
    if (avoids_denominators(lambda, {&g})) break;
    if (t > 100000) throw std::logic_error("count_lattice_points: no specialization direction found");
  }
  Rational total = 0;
  for (const auto& term : g.terms()) total += laurent_coefficients(term, lambda, 0)[term.denominators.size()];
  if (total.get_den() != 1) {
    throw std::invalid_argument("count_lattice_points: non-integral value " + conic::to_string(total) +
                                " (not the generating function of a bounded set)");
  }
  return total.get_num();
}

std::vector<IntVector> lattice_points(const Polytope& p) {
  auto [lo, hi] = p.bounding_box();
  const std::size_t d = p.dim();
  IntVector from(d), to(d);
  for (std::size_t i = 0; i < d; ++i) {
    from[i] = ceil(lo[i]);
    to[i] = floor(hi[i]);
    if (from[i] > to[i]) return {};
  }
  std::vector<IntVector> out;
  IntVector m = from;
  while (true) {
    if (p.contains(to_rational(m))) out.push_back(m);
    std::size_t i = d;
    while (i-- > 0) {
      if (++m[i] <= to[i]) break;
      m[i] = from[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

RationalGF gf_brute_force(const Polytope& p) {
  RationalGF g(p.dim());
  g.add_term({Rational(1), lattice_points(p), {}});
  return g;
}

bool gf_equal_as_functions(const RationalGF& g1, const RationalGF& g2, std::size_t trials, std::uint64_t seed) {
  if (g1.dim() != g2.dim()) return false;
  const std::size_t d = g1.dim();
  RationalGF diff = g1;
  diff += -g2;
  std::size_t max_k = 0;
  for (const auto& t : diff.terms()) max_k = std::max(max_k, t.denominators.size());

  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    IntVector lambda(d);
    do {
      for (auto& x : lambda) x = rng.uniform(-50, 50);
    } while (is_zero(lambda) || !avoids_denominators(lambda, {&diff}));

    // Coefficients of s^j for j = -max_k .. 1.
    std::vector<Rational> sum(max_k + 2, Rational(0));
    for (const auto& t : diff.terms()) {
      auto c = laurent_coefficients(t, lambda, 1);
      std::size_t offset = max_k - t.denominators.size();
      for (std::size_t j = 0; j < c.size(); ++j) sum[offset + j] += c[j];
    }
    for (const auto& c : sum)
      if (c != 0) return false;

    RatVector z(d);
    bool defined = false;
    while (!defined) {
      for (auto& c : z) c = Rational(rng.uniform(2, 9), rng.uniform(1, 9)), c.canonicalize();
      defined = true;
      for (const auto& t : diff.terms())
        for (const auto& b : t.denominators)
          if (monomial_value(z, b) == 1) defined = false;
    }
    Rational value = 0;
    for (const auto& t : diff.terms()) {
      Rational numer = 0;
      for (const auto& a : t.numerator) numer += monomial_value(z, a);
      Rational denom = 1;
      for (const auto& b : t.denominators) denom *= 1 - monomial_value(z, b);
      value += t.coeff * numer / denom;
    }
    if (value != 0) return false;
  }
  return true;
}

}  // namespace conic
