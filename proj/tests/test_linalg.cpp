#include <gtest/gtest.h>

#include "conic/linalg.hpp"
#include "support.hpp"

using namespace conic;
using namespace fixtures;

namespace {

IntMatrix random_int_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

std::vector<std::vector<Rational>> rows_of(const RatMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

bool is_unimodular(const IntMatrix& m) {
  Rational d = cofactor_det(rows_of(to_rational(m)));
  return d == 1 || d == -1;
}

}  // namespace

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(6, 3)), 2);
  EXPECT_EQ(ceil(Rational(6, 3)), 2);
}

TEST(Rational, AddSubtractRoundTrip) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Rational a(rng.uniform(-1000, 1000), rng.uniform(1, 97));
    Rational b(rng.uniform(-1000, 1000), rng.uniform(1, 97));
    a.canonicalize();
    b.canonicalize();
    EXPECT_EQ(Rational((a + b) - b), a);
    if (b != 0) EXPECT_EQ(Rational((a / b) * b), a);
  }
}

TEST(Rng, IsReproducible) {
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.uniform(-3, 9), b.uniform(-3, 9));
}

TEST(Vectors, PrimitiveDividesOutContent) {
  EXPECT_EQ(primitive(iv({4, 2, 0})), iv({2, 1, 0}));
  EXPECT_EQ(primitive(RatVector{Rational(1, 2), Rational(-1, 3)}), iv({3, -2}));
  EXPECT_THROW(primitive(iv({0, 0})), std::invalid_argument);
}

TEST(Determinant, MatchesCofactorExpansion) {
  Rng rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int k = 0; k < 20; ++k) {
      IntMatrix m = random_int_matrix(rng, n, n, 6);
      EXPECT_EQ(Rational(determinant(m)), cofactor_det(rows_of(to_rational(m))));
      EXPECT_EQ(determinant(to_rational(m)), cofactor_det(rows_of(to_rational(m))));
    }
  }
}

TEST(Determinant, IsMultiplicative) {
  Rng rng(4);
  for (int k = 0; k < 30; ++k) {
    IntMatrix a = random_int_matrix(rng, 4, 4, 5), b = random_int_matrix(rng, 4, 4, 5);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Solve, ExactSolutionAndFailureModes) {
  RatMatrix a = to_rational(IntMatrix::from_rows({iv({2, 1}), iv({1, 3})}, 2));
  auto x = solve_linear(a, {Rational(3), Rational(5)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(4, 5));
  EXPECT_EQ((*x)[1], Rational(7, 5));
  RatMatrix singular = to_rational(IntMatrix::from_rows({iv({1, 2}), iv({2, 4})}, 2));
  EXPECT_FALSE(solve_linear(singular, {Rational(1), Rational(3)}));
  EXPECT_FALSE(solve_linear(singular, {Rational(1), Rational(2)}));
}

TEST(Solve, RandomSystemsRoundTrip) {
  Rng rng(8);
  for (int k = 0; k < 40; ++k) {
    IntMatrix m = random_int_matrix(rng, 4, 4, 7);
    if (determinant(m) == 0) continue;
    RatVector x;
    for (int i = 0; i < 4; ++i) x.emplace_back(rng.uniform(-9, 9), rng.uniform(1, 9));
    for (auto& c : x) c.canonicalize();
    RatMatrix a = to_rational(m);
    auto y = solve_linear(a, a * x);
    ASSERT_TRUE(y);
    EXPECT_EQ(*y, x);
    auto inv = inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_EQ(a * *inv, RatMatrix::identity(4));
  }
}

TEST(RankNullspace, RankNullityAndKernel) {
  RatMatrix a = to_rational(IntMatrix::from_rows({iv({1, 2, 3, 4}), iv({2, 4, 6, 8}), iv({0, 1, 1, 0})}, 4));
  EXPECT_EQ(rank(a), 2u);
  auto kernel = nullspace(a);
  EXPECT_EQ(kernel.size(), 2u);
  for (const auto& k : kernel) EXPECT_TRUE(is_zero(a * k));
  EXPECT_EQ(rank({iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 2})}, 3), 2u);
}

TEST(Smith, CertificateOnRandomMatrices) {
  Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    std::size_t n = 2 + k % 3;
    IntMatrix a = random_int_matrix(rng, n, n, 9);
    if (determinant(a) == 0) continue;
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_TRUE(is_unimodular(s.u));
    EXPECT_TRUE(is_unimodular(s.v));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
      EXPECT_GT(s.d(i, i), 0);
      if (i + 1 < n) EXPECT_EQ(s.d(i + 1, i + 1) % s.d(i, i), 0);
    }
    Integer prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= s.d(i, i);
    EXPECT_EQ(prod, abs(determinant(a)));
    EXPECT_EQ(unimodular_inverse(s.u) * s.u, IntMatrix::identity(n));
  }
}

TEST(Smith, KnownForm) {
  IntMatrix a = IntMatrix::from_rows({iv({2, 4, 4}), iv({-6, 6, 12}), iv({10, -4, -16})}, 3);
  SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.d(0, 0), 2);
  EXPECT_EQ(s.d(1, 1), 6);
  EXPECT_EQ(s.d(2, 2), 12);
}

TEST(Smith, RejectsRankDeficient) {
  IntMatrix a = IntMatrix::from_rows({iv({1, 2}), iv({2, 4})}, 2);
  EXPECT_THROW(smith_normal_form(a), std::invalid_argument);
}
