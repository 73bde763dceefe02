#pragma once

#include <string>
#include <vector>

#include "conic/rational.hpp"

namespace conic {

// Univariate polynomial in z with integer coefficients, stored in ascending
// degree with no trailing zeros (the zero polynomial is empty).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long constant) : IntPoly(Integer(constant)) {}  // NOLINT: implicit from small constants
  explicit IntPoly(const Integer& constant);
  explicit IntPoly(std::vector<Integer> ascending);

  static IntPoly z() { return IntPoly(std::vector<Integer>{0, 1}); }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Integer at(const Integer& z) const;
  IntPoly pow(unsigned e) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Descending form, e.g. "z^2-2*z+1"; zero prints as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace conic
