#pragma once

#include <optional>
#include <vector>

#include "conic/matrix.hpp"

namespace conic {

// Exact solution of A x = b. Absent when the system is inconsistent or
// does not determine x uniquely (rank(A) < cols).
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

Rational determinant(const RatMatrix& a);
Integer determinant(const IntMatrix& a);

std::size_t rank(const RatMatrix& a);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t dim);

// Basis of {x : A x = 0}, one vector per free column of the echelon form.
std::vector<RatVector> nullspace(const RatMatrix& a);

std::optional<RatMatrix> inverse(const RatMatrix& a);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

// Requires full column rank; rank-deficient input throws std::invalid_argument.
SmithForm smith_normal_form(const IntMatrix& a);

// Integral inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace conic
