#include <gtest/gtest.h>

#include "support.hpp"

using namespace conic;
using namespace fixtures;

namespace {

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Lattice points of apex + sum lambda_i t_i, lambda in [0,1) / (0,1], by
// scanning a bounding box and solving for lambda.
std::vector<IntVector> parallelepiped_oracle(const std::vector<IntVector>& t, const RatVector& apex,
                                             const std::vector<bool>& open) {
  const std::size_t d = apex.size();
  RatMatrix inv = *inverse(to_rational(IntMatrix::from_columns(t, d)));
  std::vector<IntVector> out;
  long bound = 0;
  for (const auto& g : t)
    for (const auto& x : g) bound += std::abs(x.get_si());
  bound += 2;
  count_in_box(d, -bound, bound, [&](const RatVector& m) {
    RatVector lambda = inv * subtract(m, apex);
    for (std::size_t i = 0; i < d; ++i) {
      bool ok = open[i] ? (lambda[i] > 0 && lambda[i] <= 1) : (lambda[i] >= 0 && lambda[i] < 1);
      if (!ok) return false;
    }
    out.push_back(to_integer(m));
    return true;
  });
  return sorted(out);
}

}  // namespace

TEST(Parallelepiped, MatchesScanOracle) {
  std::vector<std::vector<IntVector>> gens{{iv({1, 0}), iv({0, 1})},
                                           {iv({2, 1}), iv({1, 2})},
                                           {iv({1, 1}), iv({1, -1})},
                                           {iv({3, 1, 0}), iv({0, 2, 1}), iv({1, 0, 2})}};
  std::vector<RatVector> apexes{pt({0, 0}), RatVector{Rational(1, 2), Rational(-1, 3)}};
  for (const auto& t : gens) {
    for (int variant = 0; variant < 4; ++variant) {
      const std::size_t d = t.size();
      RatVector apex = d == 2 ? apexes[variant % 2] : RatVector{Rational(1, 3), Rational(0), Rational(-2, 5)};
      std::vector<bool> open(d, false);
      open[0] = variant / 2 == 1;
      auto pts = enumerate_parallelepiped(t, apex, open);
      EXPECT_EQ(pts, parallelepiped_oracle(t, apex, open));
      IntMatrix m = IntMatrix::from_columns(t, d);
      EXPECT_EQ(Integer(static_cast<unsigned long>(pts.size())), abs(determinant(m)));
    }
  }
}

TEST(GF, SegmentBrionMatchesWorkedExample) {
  RationalGF g = brion_gf(segment(-3, 5));
  EXPECT_EQ(g.to_string(), "x^-3/(1-x) - x^6/(1-x)");
  EXPECT_EQ(count_lattice_points(g), 9);
  EXPECT_TRUE(gf_equal_as_functions(g, gf_brute_force(segment(-3, 5)), 5, 1));
}

TEST(GF, NormalFormFoldsNegativeDenominators) {
  RationalGF g(1);
  g.add_term({Rational(1), {iv({5})}, {iv({-1})}});
  ASSERT_EQ(g.terms().size(), 1u);
  EXPECT_EQ(g.terms()[0].coeff, -1);
  EXPECT_EQ(g.terms()[0].numerator[0], iv({6}));
  EXPECT_EQ(g.terms()[0].denominators[0], iv({1}));
}

TEST(GF, EqualityTesterSeparatesDifferentFunctions) {
  RationalGF a = brion_gf(segment(-3, 5)), b = brion_gf(segment(-3, 4));
  EXPECT_FALSE(gf_equal_as_functions(a, b, 3, 7));
  // 1/(1-x) = 1 + x/(1-x)
  RationalGF c(1), d(1);
  c.add_term({Rational(1), {iv({0})}, {iv({1})}});
  d.add_term({Rational(1), {iv({0})}, {}});
  d.add_term({Rational(1), {iv({1})}, {iv({1})}});
  EXPECT_TRUE(gf_equal_as_functions(c, d, 4, 3));
}

TEST(GF, LineContainingConesContributeZero) {
  Polytope seg = segment(-3, 5);
  Cone line = tangent_cone(seg, seg.whole_face());
  EXPECT_GT(line.lineality_dim(), 0u);
  EXPECT_TRUE(gf_cone(line).empty());
  EXPECT_EQ(gram_gf(seg).to_string(), brion_gf(seg).to_string());
}

TEST(GF, HalfOpenTriangulationPartitionsCone) {
  Cone c = Cone::from_generators(pt({0, 0, 0}), {iv({1, 0, 1}), iv({-1, 0, 1}), iv({0, 1, 1}), iv({0, -1, 1})});
  auto cells = half_open_triangulation(c);
  ASSERT_EQ(cells.size(), 2u);
  std::vector<RatMatrix> duals;
  for (const auto& cell : cells) duals.push_back(*inverse(to_rational(IntMatrix::from_columns(cell.generators, 3))));
  count_in_box(3, -4, 4, [&](const RatVector& x) {
    int hits = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      RatVector lambda = duals[k] * x;
      bool in = true;
      for (std::size_t i = 0; i < 3; ++i) in = in && (cells[k].open[i] ? lambda[i] > 0 : lambda[i] >= 0);
      hits += in;
    }
    EXPECT_EQ(hits, c.contains(x) ? 1 : 0) << to_string(x);
    return false;
  });
}

TEST(Counting, BrionMatchesEnumeration) {
  std::vector<Polytope> ps{segment(-3, 5),
                           Polytope::from_vertices({RatVector{Rational(-5, 2)}, RatVector{Rational(7, 3)}}),
                           square(),
                           unit_box(3),
                           unit_box(4),
                           pyramid(),
                           octahedron(),
                           Polytope::from_vertices({pt({0, 0}), pt({2, 1}), pt({1, 2})}),
                           Polytope::from_vertices({RatVector{Rational(-1, 2), Rational(0)},
                                                    RatVector{Rational(7, 2), Rational(1, 3)},
                                                    RatVector{Rational(1), Rational(5, 2)}})};
  for (const auto& p : ps) {
    EXPECT_EQ(count_lattice_points(brion_gf(p)), Integer(static_cast<unsigned long>(lattice_points(p).size())));
    EXPECT_EQ(count_lattice_points(gram_gf(p)), Integer(static_cast<unsigned long>(lattice_points(p).size())));
  }
  EXPECT_EQ(count_lattice_points(brion_gf(pyramid())), 10);

  // Six-ray apex: lexicographic cells meet in a lone ray, which the half-open
  // flags must still count once.
  Polytope hex = Polytope::from_vertices({pt({0, 0, 0}), pt({2, 0, 1}), pt({1, 2, 1}), pt({-1, 2, 1}), pt({-2, 0, 1}),
                                          pt({-1, -2, 1}), pt({1, -2, 1})});
  for (long t = 1; t <= 3; ++t) {
    Polytope q = hex.dilated(Rational(t));
    EXPECT_EQ(count_lattice_points(brion_gf(q)), Integer(static_cast<unsigned long>(lattice_points(q).size())));
  }
  EXPECT_EQ(count_lattice_points(brion_gf(unit_box(3))), 8);
}

TEST(Counting, DilationSweep) {
  // t P for t = 1, 2, 3: counts agree with enumeration; the simplex count is C(t+3, 3).
  Polytope tet = Polytope::from_vertices({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  for (long t = 1; t <= 3; ++t) {
    for (const Polytope& p : {tet, pyramid(), octahedron()}) {
      Polytope q = p.dilated(Rational(t));
      EXPECT_EQ(count_lattice_points(brion_gf(q)), Integer(static_cast<unsigned long>(lattice_points(q).size())));
    }
    EXPECT_EQ(count_lattice_points(brion_gf(tet.dilated(Rational(t)))), (t + 1) * (t + 2) * (t + 3) / 6);
  }
}

TEST(Counting, BrionEqualsEnumeratedFunction) {
  for (const Polytope& p : {square(), pyramid(), Polytope::from_vertices({pt({0, 0}), pt({2, 1}), pt({1, 2})})}) {
    EXPECT_TRUE(gf_equal_as_functions(brion_gf(p), gf_brute_force(p), 4, 2));
  }
}
