#include <gtest/gtest.h>

#include "support.hpp"

using namespace conic;
using namespace fixtures;

namespace {

std::size_t vertex_at(const Polytope& p, const RatVector& x) {
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    if (p.vertices()[v] == x) return v;
  throw std::logic_error("no such vertex");
}

}  // namespace

TEST(Genericity, EdgesOfSquareAndPyramid) {
  EXPECT_TRUE(is_generic(Functional(iv({1, 2})), square()));
  EXPECT_FALSE(is_generic(Functional(iv({1, 0})), square()));
  EXPECT_TRUE(is_generic(Functional(iv({4, 2, 0})), pyramid()));
  EXPECT_THROW(Functional(iv({0, 0})), std::invalid_argument);
}

TEST(Polarize, SegmentEnds) {
  Polytope seg = segment(-3, 5);
  Functional xi(iv({1}));
  VertexPolarization a = polarize(seg, 0, xi), b = polarize(seg, 1, xi);
  EXPECT_EQ(a.index, 0u);
  EXPECT_EQ(b.index, 1u);
  LocallyClosedPiece pb = polarized_tangent_cone(seg, 1, xi);
  EXPECT_FALSE(pb.contains(pt({5})));
  EXPECT_TRUE(pb.contains(pt({6})));
  EXPECT_TRUE(polarized_tangent_cone(seg, 0, xi).contains(pt({-3})));
}

TEST(Polarize, SquareVertexExample) {
  Polytope sq = square();
  Functional xi(iv({1, 2}));
  std::size_t v = vertex_at(sq, pt({1, 0}));
  VertexPolarization pol = polarize(sq, v, xi);
  EXPECT_EQ(pol.index, 1u);
  LocallyClosedPiece expected = LocallyClosedPiece::make(
      2, {Halfspace::make(iv({1, 0}), Rational(1), Sense::Gt), Halfspace::make(iv({0, 1}), Rational(0))});
  EXPECT_EQ(polarized_tangent_cone(sq, v, xi), expected);
}

TEST(Polarize, IndicesOnSquareAreZeroOneOneTwo) {
  Polytope sq = square();
  Functional xi(iv({1, 2}));
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < 4; ++v) idx.push_back(polarize(sq, v, xi).index);
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{0, 1, 1, 2}));
  EXPECT_EQ(lv_decomposition(sq, xi).size(), 4u);
}

TEST(Polarize, MinimizerHasIndexZeroMaximizerIndexD) {
  Rng rng(13);
  for (std::size_t d = 1; d <= 4; ++d) {
    Polytope box = unit_box(d);
    for (int k = 0; k < 5; ++k) {
      Functional xi = random_generic_functional(box, rng);
      std::size_t zeros = 0, fulls = 0;
      for (std::size_t v = 0; v < box.vertices().size(); ++v) {
        auto i = polarize(box, v, xi).index;
        zeros += i == 0;
        fulls += i == d;
      }
      EXPECT_EQ(zeros, 1u);
      EXPECT_EQ(fulls, 1u);
    }
  }
}

TEST(Polarize, ErrorsNameTheProblem) {
  EXPECT_THROW(polarize(square(), 0, Functional(iv({1, 0}))), GenericityError);
  EXPECT_THROW(polarize(pyramid(), 0, Functional(iv({4, 2, 0}))), NotSimpleError);
  try {
    lv_decomposition(pyramid(), Functional(iv({4, 2, 0})));
    FAIL();
  } catch (const NotSimpleError& e) {
    EXPECT_NE(std::string(e.what()).find("nonsimple"), std::string::npos);
  }
}

TEST(LV, SegmentAndBoxes) {
  Polytope seg = segment(-3, 5);
  IndicatorSum s = lv_decomposition(seg, Functional(iv({1})));
  for (int x2 = -12; x2 <= 16; ++x2) {
    RatVector x{Rational(x2, 2)};
    EXPECT_EQ(s.evaluate(x), IntPoly(x2 >= -6 && x2 <= 10 ? 1 : 0));
  }
  Rng rng(17);
  for (const Polytope& p : {square(), unit_box(3), Polytope::from_vertices({pt({0, 0}), pt({2, 1}), pt({1, 2})})}) {
    for (int k = 0; k < 5; ++k) {
      Functional xi = random_generic_functional(p, rng);
      EXPECT_TRUE(verify_identity(lv_decomposition(p, xi), indicator_of(p), default_witnesses(p)).ok);
    }
  }
}

TEST(Weighted, PieceValues) {
  VertexPolarization pol;
  pol.alpha = {Rational(2), Rational(-1)};
  EXPECT_EQ(weighted_polarized_piece_value(pol, {}), IntPoly(1));
  EXPECT_EQ(weighted_polarized_piece_value(pol, {0}), IntPoly::z());
  EXPECT_EQ(weighted_polarized_piece_value(pol, {1}), IntPoly(1) - IntPoly::z());
}

TEST(Weighted, SquarePointValues) {
  Polytope sq = square();
  IndicatorSum w = weighted_lv_decomposition(sq, Functional(iv({1, 2})));
  EXPECT_EQ(w.evaluate(RatVector{Rational(1, 2), Rational(1)}), IntPoly::z());
  EXPECT_EQ(w.evaluate(pt({1, 1})), IntPoly::z() * IntPoly::z());
  EXPECT_EQ(w.evaluate(pt({0, 0})), IntPoly::z() * IntPoly::z());
  EXPECT_EQ(w.evaluate(pt({3, 1})), IntPoly(0));
  EXPECT_EQ(w.evaluate(RatVector{Rational(1, 3), Rational(1, 2)}), IntPoly(1));
}

TEST(Weighted, SpecializationsOnCube) {
  Polytope c = unit_box(3);
  Rng rng(19);
  Functional xi = random_generic_functional(c, rng);
  IndicatorSum w = weighted_lv_decomposition(c, xi);
  auto o = default_witnesses(c);
  EXPECT_TRUE(verify_identity(w, weighted_indicator(c), o).ok);
  EXPECT_TRUE(verify_identity(w.specialized(1), lv_decomposition(c, xi), o).ok);
  EXPECT_TRUE(verify_identity(w.specialized(0), interior_indicator(c), o).ok);
}

TEST(Rearrange, SegmentTopVertex) {
  Polytope seg = segment(-3, 5);
  auto [lhs, rhs] = rearrange_for_vertex(seg, 1, Functional(iv({1})));
  EXPECT_EQ(rhs.size(), 2u);
  EXPECT_TRUE(verify_identity(lhs, rhs, default_witnesses(seg)).ok);
}

TEST(Rearrange, SquareTopAndBottom) {
  Polytope sq = square();
  Functional xi(iv({1, 2}));
  auto [lhs, rhs] = rearrange_for_vertex(sq, vertex_at(sq, pt({1, 1})), xi);
  EXPECT_EQ(rhs.size(), 4u);
  EXPECT_TRUE(verify_identity(lhs, rhs, default_witnesses(sq)).ok);
  auto [l0, r0] = rearrange_for_vertex(sq, vertex_at(sq, pt({0, 0})), xi);
  EXPECT_EQ(r0.size(), 1u);
  EXPECT_TRUE(verify_identity(l0, r0, default_witnesses(sq)).ok);
}

TEST(Partition, SignPatternsPartitionSpace) {
  EXPECT_TRUE(partition_check(segment(-3, 5), 0, default_witnesses(segment(-3, 5))).ok);
  EXPECT_TRUE(partition_check(square(), 2, default_witnesses(square())).ok);
  Polytope c = unit_box(3);
  EXPECT_EQ(sign_pattern_pieces(c, 0).size(), 8u);
  auto o = default_witnesses(c);
  o.exact_cells = true;
  EXPECT_TRUE(partition_check(c, 5, o).ok);
}
