#include "symquot/sl2.hpp"

#include "symquot/errors.hpp"
#include "symquot/integer_linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace symquot {

SL2Module::SL2Module(std::vector<Index> irreps) : irreps_(std::move(irreps)) {
  for (Index d : irreps_)
    if (d < 0) throw PreconditionError("irreducible labels must be non-negative");
  std::sort(irreps_.begin(), irreps_.end(), std::greater<>());
}

Index SL2Module::dimension() const {
  Index n = 0;
  for (Index d : irreps_) n += d + 1;
  return n;
}

Index SL2Module::trivial_count() const { return std::count(irreps_.begin(), irreps_.end(), Index(0)); }

SL2Module SL2Module::nontrivial_part() const {
  std::vector<Index> out;
  for (Index d : irreps_)
    if (d > 0) out.push_back(d);
  return SL2Module(std::move(out));
}

std::string to_string(const SL2Module& v) {
  if (v.is_zero()) return "0";
  std::map<Index, Index, std::greater<>> counts;
  for (Index d : v.irreps()) ++counts[d];
  std::string out;
  for (const auto& [d, c] : counts) {
    if (!out.empty()) out += "+";
    if (c > 1) out += std::to_string(c);
    out += "R" + std::to_string(d);
  }
  return out;
}

LaurentCharacter character(Index d) {
  if (d < 0) throw PreconditionError("irreducible label must be non-negative");
  LaurentCharacter::Terms terms;
  for (Index k = 0; k <= d; ++k) terms[static_cast<long>(d - 2 * k)] = 1;
  return LaurentCharacter(std::move(terms));
}

LaurentCharacter module_character(const SL2Module& v) {
  LaurentCharacter chi;
  for (Index d : v.irreps()) chi += character(d);
  return chi;
}

std::vector<LaurentCharacter> sym_power_characters(const LaurentCharacter& chi, Index bound) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  std::vector<LaurentCharacter> power_sums(bound + 1);
  for (Index k = 1; k <= bound; ++k) power_sums[k] = chi.adams(static_cast<long>(k));
  std::vector<LaurentCharacter> h(bound + 1);
  h[0] = LaurentCharacter::constant(1);
  for (Index d = 1; d <= bound; ++d) {
    LaurentCharacter acc;
    for (Index k = 1; k <= d; ++k) acc += power_sums[k] * h[d - k];
    h[d] = acc.divided_by(Integer(d));
  }
  return h;
}

std::vector<LaurentCharacter> sym_power_characters(const SL2Module& v, Index bound) {
  return sym_power_characters(Integer(2) * module_character(v), bound);
}

Integer multiplicity(const LaurentCharacter& chi, long m) {
  if (!chi.is_symmetric()) throw PreconditionError("multiplicity needs a symmetric character");
  return chi.coefficient(m) - chi.coefficient(m + 2);
}

ABSeries ab_series(const SL2Module& v, Index bound) {
  const auto h = sym_power_characters(v, bound);
  ABSeries out{TruncatedSeries::zeros(bound), TruncatedSeries::zeros(bound)};
  for (Index d = 0; d <= bound; ++d) {
    out.a[d] = multiplicity(h[d], 0);
    out.b[d] = multiplicity(h[d], 2);
  }
  return out;
}

namespace {

using Shape = std::vector<Index>;

const std::set<Shape>& not_two_large() {
  static const std::set<Shape> s{{1}, {1, 1}, {1, 1, 1}, {2}, {2, 2}, {2, 1}, {3}, {4}};
  return s;
}
const std::set<Shape>& not_one_large() {
  static const std::set<Shape> s{{1}, {1, 1}, {2}};
  return s;
}
const std::set<Shape>& orbifold_cases() {
  static const std::set<Shape> s{{1}, {1, 1}, {2}, {3}, {4}};
  return s;
}
const std::set<Shape>& not_zero_modular() {
  static const std::set<Shape> s{{1}, {2}};
  return s;
}

}  // namespace

SL2Classification classify_largeness(const SL2Module& v) {
  const SL2Module core = v.nontrivial_part();
  if (core.is_zero()) throw PreconditionError("classification needs a nontrivial summand");
  const Shape& shape = core.irreps();
  SL2Classification c;
  c.two_large = !not_two_large().count(shape);
  c.one_large = !not_one_large().count(shape);
  c.orbifold = orbifold_cases().count(shape) > 0;
  c.zero_modular = !not_zero_modular().count(shape);
  return c;
}

RepTriple rep_matrices(Index d) {
  if (d < 0) throw PreconditionError("irreducible label must be non-negative");
  RepTriple r{IntegerMatrix::Zero(d + 1, d + 1), IntegerMatrix::Zero(d + 1, d + 1), IntegerMatrix::Zero(d + 1, d + 1)};
  for (Index k = 0; k <= d; ++k) {
    if (k > 0) r.e(k - 1, k) = k;
    if (k < d) r.f(k + 1, k) = d - k;
    r.h(k, k) = d - 2 * k;
  }
  return r;
}

std::vector<QuadraticForm<Integer>> moment_components_sl2(const SL2Module& v) {
  const Index n = v.dimension();
  std::vector<QuadraticForm<Integer>> out(3);
  Index offset = 0;
  for (Index d : v.irreps()) {
    const RepTriple r = rep_matrices(d);
    const IntegerMatrix* mats[3] = {&r.f, &r.e, &r.h};
    for (int c = 0; c < 3; ++c)
      for (Index i = 0; i <= d; ++i)
        for (Index j = 0; j <= d; ++j)
          if ((*mats[c])(i, j) != 0) out[c].add(n + offset + i, offset + j, (*mats[c])(i, j));
    offset += d + 1;
  }
  return out;
}

RationalMatrix weight_coordinate_change(const SL2Module& v) {
  const Index n = v.dimension();
  RationalMatrix m = RationalMatrix::Zero(2 * n, 2 * n);
  Index offset = 0;
  for (Index d : v.irreps()) {
    const Rational sign = d % 2 == 1 ? Rational(1) : Rational(-1);
    Integer binom(1);
    for (Index k = 0; k <= d; ++k) {
      // z coordinate k carries weight d - 2k; its dual pairs with weight -(d - 2k),
      // which is position d - k within the block.
      m(offset + k, offset + k) = 1;
      const Rational parity = k % 2 == 0 ? Rational(1) : Rational(-1);
      m(n + offset + k, n + offset + (d - k)) = sign * parity / Rational(binom);
      binom = binom * (d - k) / (k + 1);
    }
    offset += d + 1;
  }
  return m;
}

QuadraticForm<Rational> pullback(const QuadraticForm<Rational>& q, const RationalMatrix& m) {
  QuadraticForm<Rational> out;
  for (const auto& [key, c] : q.terms()) {
    for (Index a = 0; a < m.cols(); ++a) {
      if (m(key.first, a) == 0) continue;
      for (Index b = 0; b < m.cols(); ++b) {
        if (m(key.second, b) == 0) continue;
        out.add(a, b, c * m(key.first, a) * m(key.second, b));
      }
    }
  }
  return out;
}

std::vector<QuadraticForm<Rational>> weight_moment_components(const SL2Module& v) {
  const auto base = moment_components_sl2(v);
  const RationalMatrix m = weight_coordinate_change(v);
  return {pullback(Rational(-1) * base[0].cast<Rational>(), m), pullback(base[2].cast<Rational>(), m),
          pullback(base[1].cast<Rational>(), m)};
}

JacobianProbe jacobian_rank_probe(const SL2Module& v, Index trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("probe needs at least one trial");
  const Index n = v.dimension();
  const auto comps = moment_components_sl2(v);
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return Integer(static_cast<long>(rng() % 19) - 9); };
  auto jacobian_rank = [&](const IntegerVector& x) {
    IntegerMatrix jac(3, 2 * n);
    for (int c = 0; c < 3; ++c) jac.row(c) = comps[c].gradient(x).transpose();
    return exact_rank(jac);
  };

  // Rows (A z)^T for A = f, e, h; mu(z, w) = rows * w.
  std::vector<RepTriple> blocks;
  for (Index d : v.irreps()) blocks.push_back(rep_matrices(d));
  JacobianProbe probe;
  for (Index t = 0; t < trials; ++t) {
    IntegerVector x(2 * n);
    for (Index i = 0; i < 2 * n; ++i) x(i) = draw();
    probe.generic_rank = std::max(probe.generic_rank, jacobian_rank(x));

    IntegerVector z(n);
    for (Index i = 0; i < n; ++i) z(i) = draw();
    IntegerMatrix rows = IntegerMatrix::Zero(3, n);
    Index offset = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Index size = blocks[b].h.rows();
      const IntegerVector zb = z.segment(offset, size);
      rows.block(0, offset, 1, size) = (blocks[b].f * zb).transpose();
      rows.block(1, offset, 1, size) = (blocks[b].e * zb).transpose();
      rows.block(2, offset, 1, size) = (blocks[b].h * zb).transpose();
      offset += size;
    }
    const IntegerMatrix kernel = integer_kernel_basis(rows);
    IntegerVector w = IntegerVector::Zero(n);
    for (Index c = 0; c < kernel.cols(); ++c) w += draw() * kernel.col(c);
    IntegerVector point(2 * n);
    point << z, w;
    probe.shell_rank = std::max(probe.shell_rank, jacobian_rank(point));
  }
  probe.shell_dimension_estimate = 2 * n - probe.shell_rank;
  return probe;
}

namespace {

/// Exponents k with a positive coefficient in the plethystic logarithm of s.
std::vector<Index> generator_degrees(const TruncatedSeries& s) {
  const Index bound = s.bound();
  TruncatedSeries product = TruncatedSeries::zeros(bound);
  product[0] = 1;
  std::vector<Index> out;
  for (Index k = 1; k <= bound; ++k) {
    const Integer g = s[k] - product[k];
    if (g > 0) out.push_back(k);
    const long count = static_cast<long>(to_int64(g));
    for (long r = 0; r < std::abs(count); ++r) {
      if (count > 0)
        for (Index j = k; j <= bound; ++j) product[j] += product[j - k];
      else
        for (Index j = bound; j >= k; --j) product[j] -= product[j - k];
    }
  }
  return out;
}

}  // namespace

SL2Quotient koszul_quotient_series(const SL2Module& v, Index bound, const SL2QuotientOptions& options) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  SL2Quotient result;
  const SL2Module core = v.nontrivial_part();
  const Index m = v.trivial_count();
  const HilbertSeries trivial_factor(Polynomial<Integer>::constant(1), std::vector<Index>(2 * m, 1));

  if (core.is_zero()) {
    result.truncated = expand(trivial_factor, bound);
    result.closed_form = trivial_factor;
    result.verdict = stanley_check(trivial_factor);
    result.gate_evidence = "no nontrivial summands";
    return result;
  }

  result.classification = classify_largeness(core);
  result.probe = jacobian_rank_probe(core, options.probe_trials, options.seed);
  result.gate_evidence = "classification list (exact); shell Jacobian rank " + std::to_string(result.probe.shell_rank) +
                         " at random shell points (probabilistic)";
  const bool probe_ci = result.probe.shell_rank == 3;
  if (probe_ci != result.classification->zero_modular)
    result.caveats.push_back("Jacobian probe disagrees with the classification list");
  if (!result.classification->zero_modular)
    throw PreconditionError("moment components of " + to_string(core) +
                            " are not a regular sequence: the shell is not a complete intersection");

  const ABSeries ab = ab_series(core, bound);
  TruncatedSeries h = TruncatedSeries::zeros(bound);
  for (Index k = 0; k <= bound; ++k) {
    h[k] = ab.a[k];
    if (k >= 2) h[k] -= ab.b[k - 2];
    if (k >= 4) h[k] += ab.b[k - 4];
    if (k >= 6) h[k] -= ab.a[k - 6];
  }
  result.truncated = multiply(h, expand(trivial_factor, bound));

  const bool one_large = result.classification->one_large;
  if (!one_large)
    result.caveats.push_back("not 1-large: series of the naive quotient by the moment ideal, which may differ from "
                             "the complex symplectic quotient and need not be Cohen-Macaulay");

  auto attempt = [&](std::vector<Index> den) {
    den.insert(den.end(), 2 * m, 1);
    try {
      HilbertSeries closed = reconstruct(result.truncated, den, options.guard);
      result.denominator_used = den;
      result.closed_form = canonical(closed);
      return true;
    } catch (const ReconstructionError& e) {
      result.failure = e.what();
    } catch (const PreconditionError& e) {
      result.failure = e.what();
    }
    return false;
  };

  if (options.denominators) {
    result.denominator_supplied = true;
    attempt(*options.denominators);
  } else {
    const Index factors = 2 * core.dimension() - 6;
    std::vector<Index> candidates;
    const auto gens = generator_degrees(ab.a.truncated(std::min<Index>(bound, 6)));
    for (Index e = 1; e <= 12; ++e)
      for (Index g : gens)
        if (g <= 6 && e % g == 0) {
          candidates.push_back(e);
          break;
        }
    const Index budget = bound - options.guard - 2 * m;
    bool found = false;
    if (!candidates.empty() && factors >= 0) {
      std::vector<Index> pick;
      // Multisets of `factors` candidates, nondecreasing, with the given exponent sum.
      std::function<bool(std::size_t, Index)> search = [&](std::size_t from, Index left) -> bool {
        if (static_cast<Index>(pick.size()) == factors) return left == 0 && attempt(pick);
        for (std::size_t i = from; i < candidates.size(); ++i) {
          const Index remaining = factors - static_cast<Index>(pick.size());
          if (candidates[i] * remaining > left) break;
          pick.push_back(candidates[i]);
          if (search(i, left - candidates[i])) return true;
          pick.pop_back();
        }
        return false;
      };
      for (Index total = 0; total <= budget && !found; ++total) found = search(0, total);
    }
    if (!found && result.failure.empty())
      result.failure = "no denominator with " + std::to_string(factors) + " factors fits degree bound " +
                       std::to_string(bound);
  }

  if (result.closed_form) {
    result.failure.clear();
    result.verdict = stanley_check(*result.closed_form, one_large);
  }
  return result;
}

}  // namespace symquot
