#include "symquot/certify.hpp"

#include "symquot/errors.hpp"

namespace symquot {

GorensteinVerdict stanley_check(const HilbertSeries& h, bool cohen_macaulay_guaranteed) {
  if (h.is_zero()) throw PreconditionError("stanley_check rejects the zero series");
  const HilbertSeries c = canonical(h);
  GorensteinVerdict v;
  v.cohen_macaulay_caveat = !cohen_macaulay_guaranteed;
  v.dimension = c.dimension();

  // H(1/t) = (-1)^k t^{sum e - deg N} rev(N) / prod(1 - t^e), with N = t^v N' and
  // rev taken over N's full degree. Comparing with (-1)^d t^{-a} N / prod(1 - t^e):
  const Polynomial<Integer>& num = c.numerator();
  Index order = 0;
  while (num.coefficient(order) == 0) ++order;
  const Index k = static_cast<Index>(c.denominator().size());
  const Polynomial<Integer> rev = num.reversed();  // t^{deg N} N(1/t), lowest degree 0
  // Exponent match forces a = order + deg N - sum e.
  const Index a = order + num.degree() - c.denominator_degree();
  const Integer sign((k - v.dimension) % 2 == 0 ? 1 : -1);
  // rev has lowest term t^0; compare with N / t^order.
  const Polynomial<Integer> shifted(IntegerVector(num.coefficients().tail(num.degree() + 1 - order)));
  v.functional_equation_holds = rev == sign * shifted;
  if (v.functional_equation_holds) v.a_invariant = a;
  v.graded_gorenstein = v.functional_equation_holds && a == -v.dimension;
  return v;
}

ShellAInvariant shell_a_invariant(Index rank, Index n) {
  if (rank < 0 || n < 0) throw PreconditionError("rank and dimension must be non-negative");
  const Index value = 2 * rank - 2 * n;
  return {value, value < 0};
}

}  // namespace symquot
