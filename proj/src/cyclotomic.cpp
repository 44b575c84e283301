#include "symquot/cyclotomic.hpp"

#include "symquot/errors.hpp"

#include <algorithm>
#include <numeric>

namespace symquot {

std::vector<Index> divisors(Index m) {
  std::vector<Index> out;
  for (Index d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    if (d * d != m) out.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Polynomial<Integer>& CyclotomicTable::operator()(Index m) {
  if (m < 1) throw PreconditionError("cyclotomic index must be positive");
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  // t^m - 1 = prod_{d | m} Phi_d.
  Polynomial<Integer> p = -Polynomial<Integer>::one_minus_power(m);
  for (Index d : divisors(m)) {
    if (d == m) break;
    p = *divide_exact(p, (*this)(d));
  }
  return cache_.emplace(m, std::move(p)).first->second;
}

std::map<Index, Index> cyclotomic_multiplicities(const std::vector<Index>& exponents) {
  std::map<Index, Index> mult;
  for (Index e : exponents)
    for (Index d : divisors(e)) ++mult[d];
  return mult;
}

std::vector<Index> cover_exponents(const std::map<Index, Index>& demand) {
  Index slots = 0, largest = 1;
  for (const auto& [m, c] : demand) {
    if (c <= 0) continue;
    if (m == 1) slots = c;
    largest = std::max(largest, m);
  }
  std::vector<Index> exponents(slots, 1);
  for (auto it = demand.rbegin(); it != demand.rend(); ++it) {
    const auto [m, c] = *it;
    Index covered = std::count_if(exponents.begin(), exponents.end(), [m = m](Index e) { return e % m == 0; });
    while (covered < c) {
      Index best = -1, best_lcm = 0;
      for (std::size_t s = 0; s < exponents.size(); ++s) {
        if (exponents[s] % m == 0) continue;
        const Index l = std::lcm(exponents[s], m);
        if (l > largest) continue;
        if (best < 0 || l < best_lcm) best = static_cast<Index>(s), best_lcm = l;
      }
      if (best < 0) {
        exponents.push_back(m);
      } else {
        exponents[best] = best_lcm;
      }
      ++covered;
    }
  }
  std::sort(exponents.begin(), exponents.end());
  return exponents;
}

}  // namespace symquot
