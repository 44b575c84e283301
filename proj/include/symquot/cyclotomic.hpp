#pragma once

#include "symquot/polynomial.hpp"

#include <map>
#include <vector>

namespace symquot {

/// Positive divisors of m in increasing order.
std::vector<Index> divisors(Index m);

/// Lazily computed cyclotomic polynomials; one table per computation.
class CyclotomicTable {
 public:
  const Polynomial<Integer>& operator()(Index m);

 private:
  std::map<Index, Polynomial<Integer>> cache_;
};

/// Multiplicities of cyclotomic factors: prod (1 - t^e) = +- prod Phi_m^{mult(m)}.
std::map<Index, Index> cyclotomic_multiplicities(const std::vector<Index>& exponents);

/// Chooses exponents e with #{e : m | e} >= demand(m) for every m, using
/// demand(1) slots and never exceeding the largest demanded order.
std::vector<Index> cover_exponents(const std::map<Index, Index>& demand);

}  // namespace symquot
