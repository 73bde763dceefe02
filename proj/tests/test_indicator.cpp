#include <gtest/gtest.h>

#include "conic/verify.hpp"
#include "support.hpp"

using namespace conic;
using namespace fixtures;

TEST(Polynomial, Arithmetic) {
  IntPoly z = IntPoly::z();
  IntPoly p = (IntPoly(1) - z) * (IntPoly(1) - z);
  EXPECT_EQ(p.to_string(), "z^2-2*z+1");
  EXPECT_EQ(p.at(1), 0);
  EXPECT_EQ(p.at(0), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(IntPoly(0).to_string(), "0");
  EXPECT_EQ(z.pow(3).degree(), 3);
}

TEST(FindPoint, StrictSystems) {
  // 0 < x < 1, 0 < y < x
  std::vector<Halfspace> cons{Halfspace::make(iv({1, 0}), Rational(0), Sense::Gt),
                              Halfspace::make(iv({-1, 0}), Rational(-1), Sense::Gt),
                              Halfspace::make(iv({0, 1}), Rational(0), Sense::Gt),
                              Halfspace::make(iv({1, -1}), Rational(0), Sense::Gt)};
  auto x = find_point(2, cons);
  ASSERT_TRUE(x);
  for (const auto& h : cons) EXPECT_TRUE(h.contains(*x));
  cons.push_back(Halfspace::make(iv({0, -1}), Rational(0), Sense::Ge));
  EXPECT_FALSE(find_point(2, cons));
  // x >= 0 and x <= 0 is the single point
  EXPECT_TRUE(find_point(1, {Halfspace::make(iv({1}), Rational(0)), Halfspace::make(iv({-1}), Rational(0))}));
  EXPECT_FALSE(find_point(1, {Halfspace::make(iv({1}), Rational(0), Sense::Gt), Halfspace::make(iv({-1}), Rational(0))}));
}

TEST(Piece, CanonicalForm) {
  auto a = LocallyClosedPiece::make(2, {Halfspace::make(iv({0, 1}), Rational(0)), Halfspace::make(iv({2, 0}), Rational(2)),
                                        Halfspace::make(iv({1, 0}), Rational(0))});
  auto b = LocallyClosedPiece::make(2, {Halfspace::make(iv({1, 0}), Rational(1)), Halfspace::make(iv({0, 3}), Rational(0))});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.constraints().size(), 2u);
  auto strict = LocallyClosedPiece::make(1, {Halfspace::make(iv({1}), Rational(1)), Halfspace::make(iv({1}), Rational(1), Sense::Gt)});
  ASSERT_EQ(strict.constraints().size(), 1u);
  EXPECT_EQ(strict.constraints()[0].sense, Sense::Gt);
  EXPECT_THROW(LocallyClosedPiece::make(1, {Halfspace::make(iv({1}), Rational(1)), Halfspace::make(iv({-1}), Rational(0))}),
               std::invalid_argument);
}

TEST(Indicator, SegmentGramIdentity) {
  Polytope seg = segment(-3, 5);
  IndicatorSum g = gram_decomposition(seg);
  EXPECT_EQ(g.size(), 3u);
  for (int x2 = -12; x2 <= 16; ++x2) {
    RatVector x{Rational(x2, 2)};
    long expected = (x2 >= -6 && x2 <= 10) ? 1 : 0;
    EXPECT_EQ(g.evaluate(x), IntPoly(expected)) << x2;
  }
}

TEST(Indicator, GramOnCubeBoundaryPoints) {
  Polytope c = unit_box(3);
  IndicatorSum g = gram_decomposition(c);
  EXPECT_EQ(g.size(), 27u);
  auto report = verify_identity(g, indicator_of(c), default_witnesses(c));
  EXPECT_TRUE(report.ok);
  EXPECT_EQ(report.points_checked, 7u * 7u * 7u + 200u);
}

TEST(Indicator, WeightedIndicatorOfSquare) {
  Polytope sq = square();
  IndicatorSum w = weighted_indicator(sq);
  EXPECT_EQ(w.evaluate(RatVector{Rational(1, 2), Rational(1, 2)}), IntPoly(1));
  EXPECT_EQ(w.evaluate(RatVector{Rational(1, 2), Rational(0)}), IntPoly::z());
  EXPECT_EQ(w.evaluate(pt({1, 1})), IntPoly::z() * IntPoly::z());
  EXPECT_EQ(w.evaluate(pt({2, 1})), IntPoly(0));
  auto o = default_witnesses(sq);
  EXPECT_TRUE(verify_identity(w.specialized(1), indicator_of(sq), o).ok);
  EXPECT_TRUE(verify_identity(w.specialized(0), interior_indicator(sq), o).ok);
}

TEST(Verify, ReportsCounterexample) {
  Polytope sq = square();
  IndicatorSum wrong = gram_decomposition(sq);
  wrong.add(1, LocallyClosedPiece::make(2, {Halfspace::make(iv({1, 0}), Rational(3, 2))}));
  auto report = verify_identity(wrong, indicator_of(sq), default_witnesses(sq));
  EXPECT_FALSE(report.ok);
  ASSERT_TRUE(report.counterexample);
  EXPECT_GE(report.counterexample->point[0], Rational(3, 2));
}

TEST(Verify, WitnessGridIsDeterministic) {
  WitnessOptions o{cube_box(2, Rational(0), Rational(1)), Rational(1, 2), 5, 9, false};
  std::vector<RatVector> a, b;
  for_each_witness(2, o, [&](const RatVector& x) { a.push_back(x); return true; });
  for_each_witness(2, o, [&](const RatVector& x) { b.push_back(x); return true; });
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 14u);
  EXPECT_EQ(a[0], pt({0, 0}));
  EXPECT_EQ(a[1], (RatVector{Rational(0), Rational(1, 2)}));
}

TEST(Verify, ArrangementWitnessesHitEveryFace) {
  // Two crossing lines in the plane: 9 faces.
  std::vector<Halfspace> planes{Halfspace::make(iv({1, 0}), Rational(0)), Halfspace::make(iv({0, 1}), Rational(0))};
  EXPECT_EQ(arrangement_witnesses(2, planes).size(), 9u);
  // Exact-cell mode catches a defect on a line the grid never visits.
  Polytope sq = square();
  IndicatorSum bad = indicator_of(sq);
  bad.add(1, LocallyClosedPiece::make(2, {Halfspace::make(iv({3, 0}), Rational(1)), Halfspace::make(iv({-3, 0}), Rational(-1))}));
  WitnessOptions o = default_witnesses(sq);
  o.extra_samples = 0;
  EXPECT_TRUE(verify_identity(bad, indicator_of(sq), o).ok);
  o.exact_cells = true;
  EXPECT_FALSE(verify_identity(bad, indicator_of(sq), o).ok);
}
