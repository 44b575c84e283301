#include "symquot/exact_lp.hpp"

#include "symquot/errors.hpp"

#include <vector>

namespace symquot {

bool has_nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
  const Index m = a.rows(), n = a.cols();
  if (b.size() != m) throw PreconditionError("right-hand side length mismatch");
  if (m == 0) return true;

  // Columns: n structural, m artificial, then the right-hand side. Last row is the cost.
  const Index rhs = n + m;
  RationalMatrix t = RationalMatrix::Zero(m + 1, n + m + 1);
  for (Index i = 0; i < m; ++i) {
    const Rational sign = b(i) < 0 ? Rational(-1) : Rational(1);
    t.row(i).head(n) = a.row(i) * sign;
    t(i, n + i) = 1;
    t(i, rhs) = b(i) * sign;
    t.row(m).head(n) -= t.row(i).head(n);
    t(m, rhs) -= t(i, rhs);
  }
  std::vector<Index> basis(m);
  for (Index i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    Index entering = -1;
    for (Index j = 0; j < n + m; ++j)
      if (t(m, j) < 0) {
        entering = j;
        break;
      }
    if (entering < 0) break;
    Index leaving = -1;
    Rational best;
    for (Index i = 0; i < m; ++i) {
      if (t(i, entering) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, entering);
      if (leaving < 0 || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a pivot row.
    if (leaving < 0) throw CapacityError("simplex phase one unexpectedly unbounded");
    const Rational pivot = t(leaving, entering);
    t.row(leaving) /= pivot;
    for (Index i = 0; i <= m; ++i) {
      if (i == leaving || t(i, entering) == 0) continue;
      const Rational factor = t(i, entering);
      t.row(i) -= factor * t.row(leaving);
    }
    basis[leaving] = entering;
  }
  return t(m, rhs) == 0;
}

}  // namespace symquot
