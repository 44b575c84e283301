#include "symquot/oracles.hpp"

#include "symquot/errors.hpp"
#include "symquot/integer_linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace symquot {
namespace {

/// Visits every exponent vector of the given length and total degree <= bound.
void for_each_monomial(Index length, Index bound, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> e(length, 0);
  std::function<void(Index, long)> rec = [&](Index pos, long left) {
    if (pos == length) {
      visit(e);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
    e[pos] = 0;
  };
  rec(0, bound);
}

bool invariant(const WeightMatrix& a, const std::vector<long>& e) {
  const Index n = a.dimension();
  for (Index i = 0; i < a.torus_rank(); ++i) {
    Integer w(0);
    for (Index j = 0; j < n; ++j) w += a(i, j) * (e[j] - e[n + j]);
    if (w != 0) return false;
  }
  return true;
}

long total(const std::vector<long>& e) {
  long s = 0;
  for (long v : e) s += v;
  return s;
}

}  // namespace

TruncatedSeries brute_force_invariant_series(const WeightMatrix& a, Index bound) {
  TruncatedSeries out = TruncatedSeries::zeros(bound);
  for_each_monomial(2 * a.dimension(), bound, [&](const std::vector<long>& e) {
    if (invariant(a, e)) out[total(e)] += 1;
  });
  return out;
}

std::vector<InvariantMonomial> brute_force_minimal_generators(const WeightMatrix& a, Index bound) {
  const Index n = a.dimension();
  std::set<std::vector<long>> monomials;
  for_each_monomial(2 * n, bound, [&](const std::vector<long>& e) {
    if (total(e) > 0 && invariant(a, e)) monomials.insert(e);
  });
  std::vector<InvariantMonomial> out;
  for (const auto& m : monomials) {
    bool decomposable = false;
    for (const auto& f : monomials) {
      if (f == m) continue;
      std::vector<long> rest(m.size());
      bool divides = true;
      for (std::size_t k = 0; k < m.size() && divides; ++k) {
        rest[k] = m[k] - f[k];
        divides = rest[k] >= 0;
      }
      if (divides && monomials.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (decomposable) continue;
    InvariantMonomial g{IntegerVector::Zero(n), IntegerVector::Zero(n), static_cast<Index>(total(m))};
    for (Index j = 0; j < n; ++j) {
      g.z_exponents(j) = m[j];
      g.w_exponents(j) = m[n + j];
    }
    out.push_back(std::move(g));
  }
  return out;
}

TruncatedSeries brute_force_kernel_norms(const WeightMatrix& a, Index bound) {
  const Index n = a.dimension();
  TruncatedSeries out = TruncatedSeries::zeros(bound);
  std::vector<long> x(n, 0);
  std::function<void(Index, long)> rec = [&](Index pos, long left) {
    if (pos == n) {
      for (Index i = 0; i < a.torus_rank(); ++i) {
        Integer w(0);
        for (Index j = 0; j < n; ++j) w += a(i, j) * x[j];
        if (w != 0) return;
      }
      out[bound - left] += 1;
      return;
    }
    for (long v = -left; v <= left; ++v) {
      x[pos] = v;
      rec(pos + 1, left - std::abs(v));
    }
    x[pos] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace symquot

namespace symquot {

TruncatedSeries brute_force_sl2_multiplicities(const SL2Module& v, long m, Index bound) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  if (m < 0) throw PreconditionError("highest weight must be non-negative");
  // Variables: basis x^{d-k} y^k of each block, listed twice (V and V* are isomorphic).
  struct Variable {
    long weight;
    long k;
    Index lower;  // index of the variable with k - 1, or -1
  };
  std::vector<Variable> vars;
  for (int copy = 0; copy < 2; ++copy)
    for (Index d : v.irreps())
      for (long k = 0; k <= d; ++k)
        vars.push_back({static_cast<long>(d) - 2 * k, k, k > 0 ? static_cast<Index>(vars.size()) - 1 : -1});
  const Index n = static_cast<Index>(vars.size());

  TruncatedSeries out = TruncatedSeries::zeros(bound);
  for (Index degree = 0; degree <= bound; ++degree) {
    std::map<std::vector<long>, Index> source, target;
    for_each_monomial(n, degree, [&](const std::vector<long>& e) {
      if (total(e) != degree) return;
      long w = 0;
      for (Index i = 0; i < n; ++i) w += e[i] * vars[i].weight;
      if (w == m) source.emplace(e, 0);
      if (w == m + 2) target.emplace(e, 0);
    });
    Index idx = 0;
    for (auto& [e, i] : source) i = idx++;
    idx = 0;
    for (auto& [e, i] : target) i = idx++;
    IntegerMatrix action = IntegerMatrix::Zero(static_cast<Index>(target.size()), static_cast<Index>(source.size()));
    for (const auto& [e, col] : source)
      for (Index i = 0; i < n; ++i) {
        if (e[i] == 0 || vars[i].lower < 0) continue;
        std::vector<long> image = e;
        --image[i];
        ++image[vars[i].lower];
        action(target.at(image), col) += Integer(e[i] * vars[i].k);
      }
    out[degree] = Integer(static_cast<long>(source.size()) - static_cast<long>(exact_rank(action)));
  }
  return out;
}

}  // namespace symquot
