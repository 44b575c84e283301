#include "symquot/torus.hpp"

#include "symquot/errors.hpp"
#include "symquot/exact_lp.hpp"
#include "symquot/integer_linalg.hpp"
#include "symquot/lattice_series.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace symquot {

std::vector<std::string> dual_pair_names(Index n) {
  std::vector<std::string> names;
  for (Index j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j));
  for (Index j = 1; j <= n; ++j) names.push_back("w" + std::to_string(j));
  return names;
}

WeightMatrix::WeightMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  entries_ = IntegerMatrix(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw PreconditionError("weight matrix rows differ in length");
    Index j = 0;
    for (long v : row) entries_(i, j++) = Integer(v);
    ++i;
  }
}

WeightMatrix WeightMatrix::columns(const std::vector<Index>& cols) const {
  IntegerMatrix out(entries_.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = entries_.col(cols[k]);
  return WeightMatrix(std::move(out));
}

std::vector<QuadraticForm<Integer>> moment_components(const WeightMatrix& a) {
  const Index n = a.dimension();
  std::vector<QuadraticForm<Integer>> out(a.torus_rank());
  for (Index i = 0; i < a.torus_rank(); ++i)
    for (Index j = 0; j < n; ++j)
      if (a(i, j) != 0) out[i].add(j, n + j, a(i, j));
  return out;
}

std::vector<bool> lineality_columns(const WeightMatrix& a) {
  const RationalMatrix rational = a.entries().cast<Rational>();
  std::vector<bool> out(a.dimension());
  for (Index j = 0; j < a.dimension(); ++j) {
    if (a.entries().col(j).isZero()) {
      out[j] = true;
      continue;
    }
    // c = e_j + c' with c' >= 0 and A c' = -a_j.
    out[j] = has_nonnegative_solution(rational, RationalVector(-rational.col(j)));
  }
  return out;
}

bool is_stable(const WeightMatrix& a) {
  const auto cols = lineality_columns(a);
  return std::all_of(cols.begin(), cols.end(), [](bool b) { return b; });
}

ReductionTrace stable_reduction(const WeightMatrix& a) {
  ReductionTrace trace;
  const auto lineal = lineality_columns(a);
  for (Index j = 0; j < a.dimension(); ++j) {
    if (a.entries().col(j).isZero())
      trace.trivial_columns.push_back(j);
    else if (lineal[j])
      trace.kept_columns.push_back(j);
  }
  const RowHermiteForm h = row_hermite_form(a.columns(trace.kept_columns).entries());
  trace.row_transform = h.transform;
  trace.reduced = WeightMatrix(IntegerMatrix(h.hermite.topRows(h.rank())));
  return trace;
}

WeightMatrix apply_reduction(const ReductionTrace& trace, const WeightMatrix& a) {
  const IntegerMatrix restricted = a.columns(trace.kept_columns).entries();
  const IntegerMatrix transformed = trace.row_transform * restricted;
  return WeightMatrix(IntegerMatrix(transformed.topRows(trace.reduced.torus_rank())));
}

namespace {

IntegerMatrix columns_of(const IntegerMatrix& a, unsigned mask) {
  std::vector<Index> cols;
  for (Index j = 0; j < a.cols(); ++j)
    if (mask >> j & 1U) cols.push_back(j);
  IntegerMatrix out(a.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = a.col(cols[k]);
  return out;
}

/// rank(A_S) for every support S.
std::vector<Index> subset_ranks(const IntegerMatrix& a) {
  const Index n = a.cols();
  if (n > kMaxSupportCoordinates)
    throw CapacityError("support enumeration supports at most " + std::to_string(kMaxSupportCoordinates) +
                        " coordinates, got " + std::to_string(n));
  std::vector<Index> ranks(std::size_t(1) << n);
  for (unsigned mask = 0; mask < ranks.size(); ++mask) ranks[mask] = exact_rank(columns_of(a, mask));
  return ranks;
}

}  // namespace

TorusLargenessReport largeness_report(const WeightMatrix& a) {
  const Index n = a.dimension(), l = a.torus_rank();
  const auto ranks = subset_ranks(a.entries());
  TorusLargenessReport report;
  const Index rank = ranks.back();
  report.faithful_up_to_finite = rank == l;
  report.stable = is_stable(a);
  report.fpig = report.stable && report.faithful_up_to_finite;
  report.one_large = report.stable && report.faithful_up_to_finite;
  if (report.faithful_up_to_finite) {
    Integer order(1);
    for (const Integer& f : smith_form(a.entries()).invariant_factors) order *= f;
    report.finite_kernel_order = order;
  }

  std::vector<Index> stratum_dim(l + 1, -1);
  for (unsigned mask = 0; mask < ranks.size(); ++mask) {
    const Index r = l - ranks[mask];
    stratum_dim[r] = std::max<Index>(stratum_dim[r], std::popcount(mask));
  }
  for (Index r = 0; r <= l; ++r)
    if (stratum_dim[r] >= 0) report.strata.push_back({r, stratum_dim[r]});

  bool constrained = false;
  Index k = 0;
  for (Index r = 1; r <= l; ++r) {
    if (stratum_dim[r] < 0) continue;
    const Index slack = (n - stratum_dim[r]) - r;
    k = constrained ? std::min(k, slack) : slack;
    constrained = true;
  }
  report.max_k_modular = constrained ? std::max<Index>(k, -1) : n;

  Index trivial = 0;
  for (Index j = 0; j < n; ++j) trivial += a.entries().col(j).isZero();
  if (l > 0 && report.max_k_modular >= 0) report.dim_bound_ok = l + report.max_k_modular <= n - trivial;
  return report;
}

HilbertSeries shell_hilbert(const WeightMatrix& a) {
  const Index l = a.torus_rank(), n = a.dimension();
  if (n <= kMaxSupportCoordinates && largeness_report(a).max_k_modular < 0)
    throw PreconditionError("moment components are not a regular sequence: module is not 0-modular");
  if (n > kMaxSupportCoordinates) throw CapacityError("support enumeration capacity exceeded");
  return HilbertSeries(pow(Polynomial<Integer>::one_minus_power(2), l), std::vector<Index>(2 * n, 1));
}

namespace {

using Count = unsigned __int128;

Integer to_integer(Count c) {
  const auto hi = static_cast<std::uint64_t>(c >> 64);
  const auto lo = static_cast<std::uint64_t>(c);
  Integer out(hi);
  out <<= 64;
  out += Integer(lo);
  return out;
}

/// Dense box of weight vectors with per-coordinate radius.
struct Layer {
  std::vector<long> radius;
  std::vector<long> stride;
  std::vector<Count> cells;

  explicit Layer(std::vector<long> r) : radius(std::move(r)), stride(radius.size()) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < radius.size(); ++i) {
      stride[i] = static_cast<long>(size);
      size *= static_cast<std::size_t>(2 * radius[i] + 1);
    }
    cells.assign(size, 0);
  }
  static std::size_t size_for(const std::vector<long>& r) {
    std::size_t size = 1;
    for (long x : r) size *= static_cast<std::size_t>(2 * x + 1);
    return size;
  }
};

}  // namespace

TruncatedSeries invariant_series_dp(const WeightMatrix& a, Index bound, const DpLimits& limits) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  const std::vector<Index> rows = independent_rows(a.entries());
  const Index l = static_cast<Index>(rows.size()), n = a.dimension();
  std::vector<std::vector<long>> weights;  // one per variable z_j, w_j
  std::vector<long> largest(l, 0);
  for (Index j = 0; j < n; ++j) {
    std::vector<long> c(l);
    for (Index i = 0; i < l; ++i) {
      c[i] = static_cast<long>(to_int64(a(rows[i], j)));
      largest[i] = std::max(largest[i], std::abs(c[i]));
    }
    std::vector<long> neg(l);
    for (Index i = 0; i < l; ++i) neg[i] = -c[i];
    weights.push_back(std::move(c));
    weights.push_back(std::move(neg));
  }

  // A state of degree k can only return to weight 0 if |w_i| <= (bound - k) * largest_i.
  std::vector<Layer> layers;
  std::size_t total = 0;
  for (Index k = 0; k <= bound; ++k) {
    std::vector<long> r(l);
    for (Index i = 0; i < l; ++i) r[i] = std::min(k, bound - k) * largest[i];
    total += Layer::size_for(r);
    if (total > limits.max_cells)
      throw CapacityError("invariant series state space exceeds " + std::to_string(limits.max_cells) + " cells");
    layers.emplace_back(std::move(r));
  }
  auto center = [&](const Layer& layer) {
    long idx = 0;
    for (Index i = 0; i < l; ++i) idx += layer.radius[i] * layer.stride[i];
    return idx;
  };
  layers[0].cells[center(layers[0])] = 1;

  std::vector<long> coord(l);
  for (const auto& c : weights) {
    for (Index k = 1; k <= bound; ++k) {
      Layer& cur = layers[k];
      const Layer& prev = layers[k - 1];
      for (Index i = 0; i < l; ++i) coord[i] = -cur.radius[i];
      for (std::size_t idx = 0; idx < cur.cells.size(); ++idx) {
        long src = 0;
        bool inside = true;
        for (Index i = 0; i < l; ++i) {
          const long s = coord[i] - c[i];
          if (s < -prev.radius[i] || s > prev.radius[i]) {
            inside = false;
            break;
          }
          src += (s + prev.radius[i]) * prev.stride[i];
        }
        if (inside && prev.cells[src] != 0) {
          if (__builtin_add_overflow(cur.cells[idx], prev.cells[src], &cur.cells[idx]))
            throw CapacityError("invariant series coefficient exceeds 128-bit range");
        }
        for (Index i = 0; i < l; ++i) {
          if (++coord[i] <= cur.radius[i]) break;
          coord[i] = -cur.radius[i];
        }
      }
    }
  }

  TruncatedSeries out = TruncatedSeries::zeros(bound);
  for (Index k = 0; k <= bound; ++k) out[k] = to_integer(layers[k].cells[center(layers[k])]);
  return out;
}

std::vector<InvariantMonomial> minimal_generators(const WeightMatrix& a, Index bound) {
  if (bound < 2) throw PreconditionError("minimal generator search needs degree bound >= 2");
  const Index n = a.dimension(), l = a.torus_rank();
  std::vector<std::vector<long>> cols(n, std::vector<long>(l));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < l; ++i) cols[j][i] = static_cast<long>(to_int64(a(i, j)));
  // tail_max[j][i] = max_{j' >= j} |a_{ij'}|.
  std::vector<std::vector<long>> tail_max(n + 1, std::vector<long>(l, 0));
  for (Index j = n - 1; j >= 0; --j)
    for (Index i = 0; i < l; ++i) tail_max[j][i] = std::max(tail_max[j + 1][i], std::abs(cols[j][i]));

  constexpr std::size_t kMaxPoints = 5000000;
  std::vector<std::vector<long>> points;
  std::vector<long> x(n, 0), partial(l, 0);
  std::function<void(Index, long)> search = [&](Index j, long budget) {
    for (Index i = 0; i < l; ++i)
      if (std::abs(partial[i]) > budget * tail_max[j][i]) return;
    if (j == n) {
      if (budget < bound) points.push_back(x);
      if (points.size() > kMaxPoints) throw CapacityError("too many kernel lattice points below the degree bound");
      return;
    }
    for (long v = -budget; v <= budget; ++v) {
      x[j] = v;
      for (Index i = 0; i < l; ++i) partial[i] += v * cols[j][i];
      search(j + 1, budget - std::abs(v));
      for (Index i = 0; i < l; ++i) partial[i] -= v * cols[j][i];
    }
    x[j] = 0;
  };
  search(0, bound);

  auto norm = [](const std::vector<long>& v) {
    long s = 0;
    for (long e : v) s += std::abs(e);
    return s;
  };
  std::stable_sort(points.begin(), points.end(),
                   [&](const auto& p, const auto& q) { return norm(p) < norm(q); });
  std::vector<std::vector<long>> graver;
  for (const auto& p : points) {
    bool reducible = false;
    for (const auto& g : graver) {
      bool below = true;
      for (Index j = 0; j < n && below; ++j)
        below = g[j] == 0 || (static_cast<__int128>(g[j]) * p[j] > 0 && std::abs(g[j]) <= std::abs(p[j]));
      if (below) {
        reducible = true;
        break;
      }
    }
    if (!reducible) graver.push_back(p);
  }

  std::vector<InvariantMonomial> out;
  for (Index j = 0; j < n; ++j) {
    if (a.entries().col(j).isZero()) continue;
    InvariantMonomial m{IntegerVector::Zero(n), IntegerVector::Zero(n), 2};
    m.z_exponents(j) = 1;
    m.w_exponents(j) = 1;
    out.push_back(std::move(m));
  }
  for (const auto& g : graver) {
    InvariantMonomial m{IntegerVector::Zero(n), IntegerVector::Zero(n), static_cast<Index>(norm(g))};
    for (Index j = 0; j < n; ++j) {
      if (g[j] > 0) m.z_exponents(j) = g[j];
      if (g[j] < 0) m.w_exponents(j) = -g[j];
    }
    out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.degree < q.degree; });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

ShellDiagnostics shell_diagnostics(const WeightMatrix& a) {
  const Index n = a.dimension(), l = a.torus_rank();
  const auto ranks = subset_ranks(a.entries());
  const TorusLargenessReport largeness = largeness_report(a);
  ShellDiagnostics d;
  d.complete_intersection = largeness.max_k_modular >= 0;

  // full[P]: ker(A_P) contains a vector with every coordinate nonzero, i.e. no
  // column of P is outside the span of the others.
  std::vector<bool> full(ranks.size());
  for (unsigned p = 0; p < ranks.size(); ++p) {
    bool ok = true;
    for (Index j = 0; j < n && ok; ++j)
      if (p >> j & 1U) ok = ranks[p & ~(1U << j)] == ranks[p];
    full[p] = ok;
  }
  const unsigned all = static_cast<unsigned>(ranks.size() - 1);
  for (unsigned p = 0; p <= all; ++p) {
    if (!full[p]) continue;
    const unsigned rest = all & ~p;
    for (unsigned q = rest;; q = (q - 1) & rest) {
      const Index dim = std::popcount(q) + 2 * std::popcount(p) - ranks[p];
      ++d.stratum_count;
      d.shell_dimension = std::max(d.shell_dimension, dim);
      if (ranks[p | q] < l) {
        ++d.singular_stratum_count;
        d.singular_dimension = std::max(d.singular_dimension, dim);
      }
      if (q == 0) break;
    }
  }

  const bool stable_faithful = largeness.stable && largeness.faithful_up_to_finite;
  if (d.complete_intersection) d.a_invariant = shell_a_invariant(l, n);
  if (stable_faithful) {
    d.normal = Verdict::Yes;
  } else if (d.complete_intersection) {
    d.normal = d.shell_dimension - d.singular_dimension >= 2 ? Verdict::Yes : Verdict::No;
  }
  if (stable_faithful) {
    d.rational_singularities = Verdict::Yes;
  } else if ((d.a_invariant && !d.a_invariant->rational_singularities_possible) || d.normal == Verdict::No) {
    d.rational_singularities = Verdict::No;
  }
  if (!largeness.stable) d.caveats.push_back("unreduced: the module is not stable, verdicts describe the raw shell");
  if (!d.complete_intersection)
    d.caveats.push_back("the moment components are not a regular sequence; no shell a-invariant");
  return d;
}

std::string to_string(ClosedFormSource s) {
  switch (s) {
    case ClosedFormSource::Reconstructed:
      return "reconstructed";
    case ClosedFormSource::ExactVerified:
      return "exact lattice computation verified against truncation";
    case ClosedFormSource::SuppliedDenominator:
      return "reconstructed with supplied denominator";
    case ClosedFormSource::GuessedDenominator:
      return "reconstructed with generator-degree denominator";
    case ClosedFormSource::None:
      return "none";
  }
  return "none";
}

namespace {

std::vector<Index> generator_degree_guess(const WeightMatrix& kept, Index factors, Index bound) {
  std::vector<Index> degrees;
  for (const auto& g : minimal_generators(kept, std::max<Index>(2, std::min<Index>(bound, 12))))
    degrees.push_back(g.degree);
  std::vector<Index> out;
  for (std::size_t i = 0; static_cast<Index>(out.size()) < factors; ++i)
    out.push_back(i < degrees.size() ? degrees[i] : 2);
  return out;
}

}  // namespace

TorusQuotient quotient_series(const WeightMatrix& a, Index bound, const QuotientOptions& options) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  TorusQuotient result;
  result.reduction = stable_reduction(a);
  const ReductionTrace& trace = result.reduction;
  const Index m = trace.removed_trivial_columns();
  const HilbertSeries trivial_factor(Polynomial<Integer>::constant(1), std::vector<Index>(2 * m, 1));

  const WeightMatrix kept = a.columns(trace.kept_columns);
  const Index l = trace.reduced.torus_rank(), n = kept.dimension();
  TruncatedSeries reduced_series = invariant_series_dp(kept, bound, options.dp_limits);
  reduced_series = multiply(reduced_series, pow(Polynomial<Integer>::one_minus_power(2), l));
  result.truncated = multiply(reduced_series, expand(trivial_factor, bound));

  std::optional<HilbertSeries> exact;
  std::string exact_failure;
  try {
    exact = product(kernel_norm_series(trace.reduced.entries(), n - l), trivial_factor);
  } catch (const CapacityError& e) {
    exact_failure = e.what();
  }

  auto attempt = [&](const std::vector<Index>& den, ClosedFormSource source) {
    try {
      result.closed_form = reconstruct(result.truncated, den, options.guard);
      result.source = source;
    } catch (const ReconstructionError& e) {
      result.failure = e.what();
    } catch (const PreconditionError& e) {
      result.failure = e.what();
    }
  };

  if (options.denominators) {
    attempt(*options.denominators, ClosedFormSource::SuppliedDenominator);
  } else if (exact) {
    const std::vector<Index>& den = exact->denominator();
    if (bound >= exact->denominator_degree() + options.guard) {
      attempt(den, ClosedFormSource::Reconstructed);
      if (result.closed_form && !equivalent(*result.closed_form, *exact))
        throw std::logic_error("reconstructed series disagrees with the exact lattice computation");
    } else {
      if (expand(*exact, bound) != result.truncated)
        throw std::logic_error("exact lattice series disagrees with the degree-bounded series");
      result.closed_form = exact;
      result.source = ClosedFormSource::ExactVerified;
    }
  } else {
    std::vector<Index> den = generator_degree_guess(kept, 2 * n - 2 * l, bound);
    den.insert(den.end(), 2 * m, 1);
    attempt(den, ClosedFormSource::GuessedDenominator);
    if (!result.closed_form) result.failure = exact_failure + "; " + result.failure;
  }
  if (result.closed_form) {
    result.closed_form = canonical(*result.closed_form);
    result.verdict = stanley_check(*result.closed_form);
  }
  return result;
}

}  // namespace symquot
