#pragma once

#include "symquot/scalar.hpp"

#include <vector>

namespace symquot {

/// Rank by fraction-free elimination; exact for Integer and Rational scalars.
template <typename Derived>
Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Index rows = m.rows(), cols = m.cols();
  Index rank = 0;
  Scalar previous(1);
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.row(pivot).swap(m.row(rank));
    const Scalar p = m(rank, c);
    for (Index i = rank + 1; i < rows; ++i) {
      const Scalar factor = m(i, c);
      for (Index j = c + 1; j < cols; ++j) m(i, j) = (p * m(i, j) - factor * m(rank, j)) / previous;
      m(i, c) = Scalar(0);
    }
    previous = p;
    ++rank;
  }
  return rank;
}

/// Determinant of a square matrix by fraction-free elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Index n = m.rows();
  Scalar previous(1), sign(1);
  for (Index c = 0; c < n; ++c) {
    Index pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      sign = -sign;
    }
    for (Index i = c + 1; i < n; ++i) {
      for (Index j = c + 1; j < n; ++j) m(i, j) = (m(c, c) * m(i, j) - m(i, c) * m(c, j)) / previous;
      m(i, c) = Scalar(0);
    }
    previous = m(c, c);
  }
  return n == 0 ? Scalar(1) : Scalar(sign * m(n - 1, n - 1));
}

/// Row-style Hermite normal form: transform * A = hermite with a unimodular transform.
struct RowHermiteForm {
  IntegerMatrix hermite;
  IntegerMatrix transform;
  IntegerMatrix inverse_transform;
  std::vector<Index> pivot_columns;
  Index rank() const { return static_cast<Index>(pivot_columns.size()); }
};

RowHermiteForm row_hermite_form(const IntegerMatrix& a);

/// left * A * right = diag(invariant factors, 0...) with unimodular left and right.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
  /// Nonzero invariant factors s_1 | s_2 | ...
  std::vector<Integer> invariant_factors;
};

SmithForm smith_form(const IntegerMatrix& a);

/// Columns form a Z-basis of {x in Z^n : A x = 0}.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& a);

/// For R (n x k, rank k): basis columns of Z^n intersected with span(R), and the
/// coordinate matrix C with R = basis * C.
struct SaturatedBasis {
  IntegerMatrix basis;
  IntegerMatrix coordinates;
};

SaturatedBasis saturate_columns(const IntegerMatrix& r);

/// Indices of a maximal set of linearly independent rows, chosen greedily in order.
std::vector<Index> independent_rows(const IntegerMatrix& a);

/// g = x*a + y*b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y);

/// Floor division for integers.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace symquot
