#include "conic/linalg.hpp"

#include <stdexcept>

namespace conic {

namespace {

// Fraction-free (Bareiss) forward elimination over the first `elim_cols`
// columns. Every intermediate entry is a minor of the input, so divisions
// by the previous pivot are exact.
struct Echelon {
  IntMatrix m;
  std::vector<std::size_t> pivot_cols;
  int swap_sign = 1;
};

Echelon bareiss(IntMatrix m, std::size_t elim_cols) {
  Echelon e;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      e.swap_sign = -e.swap_sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("Bareiss elimination: inexact division");
        }
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

// Clears the denominators of each row by a positive factor; returns the
// product of the factors.
IntMatrix integral_rows(const RatMatrix& a, Rational* scale_product) {
  IntMatrix m(a.rows(), a.cols());
  Rational product = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) den = lcm(den, a(i, j).get_den());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational s = a(i, j) * den;
      m(i, j) = s.get_num();
    }
    product *= den;
  }
  if (scale_product) *scale_product = product;
  return m;
}

// Back substitution on the echelon rows: solves for the pivot variables,
// given values of the free variables already stored in x, against the
// right-hand side held in column `rhs_col` (or zero if rhs_col == npos).
void back_substitute(const Echelon& e, std::size_t rhs_col, RatVector& x) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    std::size_t pc = e.pivot_cols[k];
    Rational s = rhs_col == static_cast<std::size_t>(-1) ? Rational(0) : Rational(e.m(k, rhs_col));
    for (std::size_t j = pc + 1; j < x.size(); ++j) {
      if (e.m(k, j) != 0) s -= Rational(e.m(k, j)) * x[j];
    }
    x[pc] = s / Rational(e.m(k, pc));
  }
}

}  // namespace

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = bareiss(integral_rows(aug, nullptr), a.cols());
  for (std::size_t i = e.pivot_cols.size(); i < e.m.rows(); ++i) {
    if (e.m(i, a.cols()) != 0) return std::nullopt;
  }
  if (e.pivot_cols.size() < a.cols()) return std::nullopt;
  RatVector x(a.cols());
  back_substitute(e, a.cols(), x);
  return x;
}

Rational determinant(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  if (a.rows() == 0) return 1;
  Rational scale_product;
  Echelon e = bareiss(integral_rows(a, &scale_product), a.cols());
  if (e.pivot_cols.size() < a.rows()) return 0;
  Rational det(e.m(a.rows() - 1, a.cols() - 1));
  return det * e.swap_sign / scale_product;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  if (a.rows() == 0) return 1;
  Echelon e = bareiss(a, a.cols());
  if (e.pivot_cols.size() < a.rows()) return 0;
  return e.m(a.rows() - 1, a.cols() - 1) * e.swap_sign;
}

std::size_t rank(const RatMatrix& a) { return bareiss(integral_rows(a, nullptr), a.cols()).pivot_cols.size(); }

std::size_t rank(const std::vector<IntVector>& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  return bareiss(IntMatrix::from_rows(rows, dim), dim).pivot_cols.size();
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  Echelon e = bareiss(integral_rows(a, nullptr), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(a.cols(), Rational(0));
    x[f] = 1;
    back_substitute(e, static_cast<std::size_t>(-1), x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  std::size_t n = a.rows();
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, Rational(0));
    e[j] = 1;
    auto x = solve_linear(a, e);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  auto inv = inverse(to_rational(a));
  if (!inv) throw std::invalid_argument("unimodular_inverse: singular matrix");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if ((*inv)(i, j).get_den() != 1) throw std::invalid_argument("unimodular_inverse: not unimodular");
      r(i, j) = (*inv)(i, j).get_num();
    }
  return r;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row dst -= q row src
    for (std::size_t j = 0; j < n; ++j) d(dst, j) -= q * d(src, j);
    for (std::size_t j = 0; j < m; ++j) u(dst, j) -= q * u(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {  // col dst -= q col src
    for (std::size_t i = 0; i < m; ++i) d(i, dst) -= q * d(i, src);
    for (std::size_t i = 0; i < n; ++i) v(i, dst) -= q * v(i, src);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == m || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) throw std::invalid_argument("smith_normal_form: matrix lacks full column rank");
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_columns(t, pj);
      v.swap_columns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        row_axpy(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        col_axpy(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_axpy(t, i, -1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  if (m < n) throw std::invalid_argument("smith_normal_form: matrix lacks full column rank");
  return {std::move(u), std::move(d), std::move(v)};
}

}  // namespace conic
