#include "symquot/lattice_series.hpp"

#include "symquot/cyclotomic.hpp"
#include "symquot/errors.hpp"
#include "symquot/integer_linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace symquot {
namespace {

using RaySet = std::vector<int>;  // sorted indices into the circuit list

std::vector<Index> subset_indices(unsigned long mask, Index n) {
  std::vector<Index> out;
  for (Index j = 0; j < n; ++j)
    if (mask >> j & 1UL) out.push_back(j);
  return out;
}

IntegerMatrix select_columns(const IntegerMatrix& a, const std::vector<Index>& cols) {
  IntegerMatrix out(a.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = a.col(cols[k]);
  return out;
}

class Triangulator {
 public:
  explicit Triangulator(const std::vector<std::vector<long>>& rays) : rays_(rays) {
    dim_ = rays.empty() ? 0 : static_cast<Index>(rays.front().size());
  }

  Index rank(const RaySet& set) {
    auto it = rank_cache_.find(set);
    if (it != rank_cache_.end()) return it->second;
    IntegerMatrix m(dim_, static_cast<Index>(set.size()));
    for (std::size_t k = 0; k < set.size(); ++k)
      for (Index j = 0; j < dim_; ++j) m(j, static_cast<Index>(k)) = rays_[set[k]][j];
    const Index r = exact_rank(m);
    rank_cache_.emplace(set, r);
    return r;
  }

  /// Pulling triangulation of the cone spanned by `cone`, of dimension k.
  const std::vector<RaySet>& pull(const RaySet& cone, Index k) {
    auto it = pull_cache_.find(cone);
    if (it != pull_cache_.end()) return it->second;
    std::vector<RaySet> out;
    if (static_cast<Index>(cone.size()) == k) {
      out.push_back(cone);
    } else {
      const int apex = cone.front();
      std::set<RaySet> facets;
      for (Index j = 0; j < dim_; ++j) {
        RaySet face;
        for (int r : cone)
          if (rays_[r][j] == 0) face.push_back(r);
        if (face.empty() || face.size() == cone.size() || face.front() == apex) continue;
        if (rank(face) == k - 1) facets.insert(std::move(face));
      }
      for (const RaySet& facet : facets) {
        for (const RaySet& simplex : pull(facet, k - 1)) {
          RaySet s = simplex;
          s.insert(s.begin(), apex);
          out.push_back(std::move(s));
        }
      }
    }
    return pull_cache_.emplace(cone, std::move(out)).first->second;
  }

 private:
  const std::vector<std::vector<long>>& rays_;
  Index dim_ = 0;
  std::map<RaySet, Index> rank_cache_;
  std::map<RaySet, std::vector<RaySet>> pull_cache_;
};

/// Degrees of lattice points Σ λ_i ρ_i with 0 < λ_i <= 1 for the simplicial cone on `cols`.
std::map<long, Integer> open_parallelepiped_degrees(const IntegerMatrix& rays, const std::vector<long>& ray_degrees,
                                                    std::size_t& budget) {
  const Index k = rays.cols();
  std::map<long, Integer> out;
  const SaturatedBasis sat = saturate_columns(rays);
  const SmithForm snf = smith_form(sat.coordinates);
  std::vector<long> factors;
  for (const Integer& f : snf.invariant_factors) factors.push_back(static_cast<long>(to_int64(f)));
  const long top = factors.back();
  long count = 1;
  for (long f : factors) count *= f;
  if (static_cast<std::size_t>(count) > budget) throw CapacityError("lattice point enumeration exceeds configured limit");
  budget -= static_cast<std::size_t>(count);

  // λ = V μ with μ_j = g_j / s_j; scaled by `top` everything is integral.
  std::vector<std::vector<long>> step(k, std::vector<long>(k));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) step[i][j] = static_cast<long>(to_int64(snf.right(i, j))) * (top / factors[j]);

  std::vector<long> g(k, 0);
  std::vector<long> scaled(k, 0);
  for (;;) {
    long degree_scaled = 0;
    for (Index i = 0; i < k; ++i) {
      long v = 0;
      for (Index j = 0; j < k; ++j) v += step[i][j] * g[j];
      v %= top;
      if (v <= 0) v += top;
      degree_scaled += v * ray_degrees[i];
    }
    out[degree_scaled / top] += 1;
    Index pos = 0;
    while (pos < k && ++g[pos] == factors[pos]) g[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

}  // namespace

std::vector<IntegerVector> kernel_circuits(const IntegerMatrix& a) {
  const Index n = a.cols();
  if (n > 24) throw CapacityError("circuit enumeration supports at most 24 coordinates");
  const Index rank = exact_rank(a);
  std::vector<IntegerVector> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    const auto support = subset_indices(mask, n);
    if (static_cast<Index>(support.size()) > rank + 1) continue;
    const IntegerMatrix sub = select_columns(a, support);
    if (exact_rank(sub) != static_cast<Index>(support.size()) - 1) continue;
    const IntegerMatrix kernel = integer_kernel_basis(sub);
    bool full = true;
    for (Index i = 0; i < kernel.rows(); ++i) full = full && kernel(i, 0) != 0;
    if (!full) continue;
    IntegerVector c = IntegerVector::Zero(n);
    for (std::size_t i = 0; i < support.size(); ++i) c(support[i]) = kernel(static_cast<Index>(i), 0);
    // Normalize so the first nonzero entry is positive, then emit both signs.
    if (c(support.front()) < 0) c = -c;
    out.push_back(c);
    out.push_back(-c);
  }
  return out;
}

HilbertSeries kernel_norm_series(const IntegerMatrix& a, Index extra_quadratic_poles, const LatticeSeriesLimits& limits) {
  const Index n = a.cols();
  const Index dim = n - exact_rank(a);
  CyclotomicTable cyclotomic;

  // Cells of the fan grouped by their denominator degree multiset.
  std::map<std::vector<long>, std::map<long, Integer>> groups;
  groups[{}][0] += 1;

  if (dim > 0) {
    const auto circuits = kernel_circuits(a);
    if (circuits.size() > limits.max_circuits) throw CapacityError("too many kernel circuits");
    std::vector<std::vector<long>> rays;
    std::vector<long> degrees;
    for (const IntegerVector& c : circuits) {
      std::vector<long> r(n);
      long d = 0;
      for (Index j = 0; j < n; ++j) {
        r[j] = static_cast<long>(to_int64(c(j)));
        d += std::abs(r[j]);
      }
      rays.push_back(std::move(r));
      degrees.push_back(d);
    }
    // Global ray order: by degree, then by circuit order.
    std::vector<int> order(rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return degrees[x] < degrees[y]; });
    std::vector<std::vector<long>> sorted_rays;
    std::vector<long> sorted_degrees;
    for (int i : order) {
      sorted_rays.push_back(rays[i]);
      sorted_degrees.push_back(degrees[i]);
    }

    Triangulator tri(sorted_rays);
    std::set<RaySet> cells;
    if (n > 24) throw CapacityError("orthant enumeration supports at most 24 coordinates");
    for (unsigned long signs = 0; signs < (1UL << n); ++signs) {
      RaySet cone;
      for (int r = 0; r < static_cast<int>(sorted_rays.size()); ++r) {
        bool conformal = true;
        for (Index j = 0; j < n && conformal; ++j) {
          const long v = sorted_rays[r][j];
          conformal = v == 0 || ((v > 0) == !(signs >> j & 1UL));
        }
        if (conformal) cone.push_back(r);
      }
      if (static_cast<Index>(cone.size()) < dim || tri.rank(cone) != dim) continue;
      for (const RaySet& simplex : tri.pull(cone, dim)) {
        const unsigned long faces = 1UL << simplex.size();
        for (unsigned long f = 1; f < faces; ++f) {
          RaySet face;
          for (std::size_t i = 0; i < simplex.size(); ++i)
            if (f >> i & 1UL) face.push_back(simplex[i]);
          cells.insert(std::move(face));
          if (cells.size() > limits.max_cells) throw CapacityError("too many cones in the lattice fan");
        }
      }
    }

    std::size_t budget = limits.max_points;
    for (const RaySet& cell : cells) {
      IntegerMatrix m(n, static_cast<Index>(cell.size()));
      std::vector<long> cell_degrees;
      for (std::size_t k = 0; k < cell.size(); ++k) {
        for (Index j = 0; j < n; ++j) m(j, static_cast<Index>(k)) = sorted_rays[cell[k]][j];
        cell_degrees.push_back(sorted_degrees[cell[k]]);
      }
      auto points = open_parallelepiped_degrees(m, cell_degrees, budget);
      std::vector<long> key = cell_degrees;
      std::sort(key.begin(), key.end());
      auto& target = groups[key];
      for (auto& [deg, count] : points) target[deg] += count;
    }
  }

  // Common denominator prod Phi_m^{c(m)} with c(m) the largest multiplicity over groups.
  std::map<Index, Index> demand;
  for (const auto& [den, num] : groups) {
    std::vector<Index> exps(den.begin(), den.end());
    for (const auto& [m, c] : cyclotomic_multiplicities(exps)) demand[m] = std::max(demand[m], c);
  }
  Polynomial<Integer> common = Polynomial<Integer>::constant(1);
  for (const auto& [m, c] : demand) common *= pow(cyclotomic(m), c);
  const Index top = std::max<Index>(common.degree(), 0);

  // numerator = common * sum_g N_g / prod_{e in g}(1 - t^e), expanded to degree `top`.
  TruncatedSeries total = TruncatedSeries::zeros(top);
  for (const auto& [den, num] : groups) {
    TruncatedSeries s = TruncatedSeries::zeros(top);
    for (const auto& [deg, count] : num)
      if (deg <= top) s[deg] += count;
    for (long e : den)
      for (Index k = e; k <= top; ++k) s[k] += s[k - e];
    for (Index k = 0; k <= top; ++k) total[k] += s[k];
  }
  Polynomial<Integer> numerator(multiply(total, common).coeffs());

  demand[1] += extra_quadratic_poles;
  demand[2] += extra_quadratic_poles;
  const std::map<Index, Index> unreduced = demand;
  for (auto& [m, c] : demand) {
    while (c > 0) {
      auto q = divide_exact(numerator, cyclotomic(m));
      if (!q) break;
      numerator = std::move(*q);
      --c;
    }
  }
  for (auto it = demand.begin(); it != demand.end();) it = it->second == 0 ? demand.erase(it) : std::next(it);

  // Two presentations: covering the reduced or the original cyclotomic factors.
  // Prefer a numerator without negative coefficients, then the smaller degree.
  auto present = [&](const std::map<Index, Index>& target) {
    const std::vector<Index> exponents = cover_exponents(target);
    Polynomial<Integer> num = numerator;
    for (const auto& [m, c] : cyclotomic_multiplicities(exponents)) {
      const auto it = demand.find(m);
      const Index extra = c - (it == demand.end() ? 0 : it->second);
      if (extra > 0) num *= pow(cyclotomic(m), extra);
    }
    // Cyclotomic products and (1 - t^e) products agree up to a global sign; the
    // series has constant term 1.
    if (num.coefficient(0) < 0) num = Integer(-1) * num;
    if (num.coefficient(0) != 1) throw std::logic_error("lattice series normalization failed");
    return canonical(HilbertSeries(std::move(num), exponents));
  };
  auto nonnegative = [](const HilbertSeries& h) {
    for (Index k = 0; k <= h.numerator().degree(); ++k)
      if (h.numerator().coefficient(k) < 0) return false;
    return true;
  };
  HilbertSeries h = present(demand);
  if (unreduced != demand) {
    HilbertSeries alt = present(unreduced);
    const bool h_ok = nonnegative(h), alt_ok = nonnegative(alt);
    if ((alt_ok && !h_ok) || (alt_ok == h_ok && alt.denominator_degree() < h.denominator_degree())) h = std::move(alt);
  }
  return h;
}
}  // namespace symquot
