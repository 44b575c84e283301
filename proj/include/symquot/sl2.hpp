#pragma once

#include "symquot/certify.hpp"
#include "symquot/laurent.hpp"
#include "symquot/quadratic_form.hpp"
#include "symquot/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symquot {

/// Direct sum of irreducible SL2-modules R_d (binary forms of degree d).
class SL2Module {
 public:
  SL2Module() = default;
  /// Throws PreconditionError on negative labels. Labels are kept sorted descending.
  explicit SL2Module(std::vector<Index> irreps);
  SL2Module(std::initializer_list<Index> irreps) : SL2Module(std::vector<Index>(irreps)) {}

  const std::vector<Index>& irreps() const { return irreps_; }
  /// Complex dimension sum (d + 1).
  Index dimension() const;
  Index trivial_count() const;
  /// The summands with d >= 1.
  SL2Module nontrivial_part() const;
  bool is_zero() const { return irreps_.empty(); }

  friend bool operator==(const SL2Module&, const SL2Module&) = default;

 private:
  std::vector<Index> irreps_;
};

/// e.g. "R2+R1", "3R1", "0".
std::string to_string(const SL2Module& v);

/// q^d + q^{d-2} + ... + q^{-d}.
LaurentCharacter character(Index d);
LaurentCharacter module_character(const SL2Module& v);

/// Characters of Sym^k of the given character for k = 0..bound, via Newton's identities.
std::vector<LaurentCharacter> sym_power_characters(const LaurentCharacter& chi, Index bound);
/// Characters of Sym^k(V + V*) for k = 0..bound.
std::vector<LaurentCharacter> sym_power_characters(const SL2Module& v, Index bound);

/// Number of R_m summands: coeff(m) - coeff(m + 2). Rejects asymmetric characters.
Integer multiplicity(const LaurentCharacter& chi, long m);

struct ABSeries {
  /// Multiplicity of the trivial module per degree of C[V + V*].
  TruncatedSeries a{1};
  /// Multiplicity of the adjoint module R2 per degree.
  TruncatedSeries b{0};
};

ABSeries ab_series(const SL2Module& v, Index bound);

struct SL2Classification {
  bool two_large = false;
  bool one_large = false;
  /// Quotient is a linear symplectic orbifold.
  bool orbifold = false;
  /// Moment components form a regular sequence.
  bool zero_modular = false;
};

/// Classifies the nontrivial part of v; rejects modules without nontrivial summands.
SL2Classification classify_largeness(const SL2Module& v);

struct RepTriple {
  IntegerMatrix e, f, h;
};

/// Action of e = x d/dy, f = y d/dx, h on the basis x^{d-k} y^k, k = 0..d.
RepTriple rep_matrices(Index d);

/// Components mu^A(z, w) = w . (A z) for A = f, e, h, in that order. Coordinates
/// 0..n-1 are z, n..2n-1 are w, blocks ordered as in v.irreps().
std::vector<QuadraticForm<Integer>> moment_components_sl2(const SL2Module& v);

/// Change of coordinates to weight coordinates (z_m, z'_m) where the dual block of
/// R_d pairs with the invariant form: w_{x^{d-k} y^k} = s_d (-1)^k / C(d, k) z'_{-(d-2k)}
/// with s_d = (-1)^{d+1}. Column order: for each block, z_d, z_{d-2}, ..., z_{-d},
/// then for each block z'_d, ..., z'_{-d}. Entry (old, new) expresses an old coordinate
/// in the new ones.
RationalMatrix weight_coordinate_change(const SL2Module& v);

/// Components in weight coordinates ordered (-mu^f, mu^h, mu^e).
std::vector<QuadraticForm<Rational>> weight_moment_components(const SL2Module& v);

/// q(M y) for old coordinates x = M y.
QuadraticForm<Rational> pullback(const QuadraticForm<Rational>& q, const RationalMatrix& m);

struct JacobianProbe {
  /// Largest rank of d(mu) at random points.
  Index generic_rank = 0;
  /// Largest rank of d(mu) at random points of the shell.
  Index shell_rank = 0;
  /// 2n minus shell_rank.
  Index shell_dimension_estimate = 0;
  bool probabilistic = true;
};

JacobianProbe jacobian_rank_probe(const SL2Module& v, Index trials, std::uint64_t seed);

struct SL2QuotientOptions {
  std::optional<std::vector<Index>> denominators;
  Index guard = kDefaultGuard;
  Index probe_trials = 4;
  std::uint64_t seed = 1;
};

struct SL2Quotient {
  std::optional<SL2Classification> classification;
  JacobianProbe probe;
  /// Which evidence decided the complete-intersection gate.
  std::string gate_evidence;
  TruncatedSeries truncated{1};
  std::optional<HilbertSeries> closed_form;
  std::vector<Index> denominator_used;
  bool denominator_supplied = false;
  std::optional<GorensteinVerdict> verdict;
  std::vector<std::string> caveats;
  std::string failure;
};

constexpr Index kDefaultSL2Degree = 24;

/// H = a - t^2 b + t^4 b - t^6 a on the nontrivial part, times 1/(1-t)^{2m} for
/// m trivial summands. Throws PreconditionError when the moment components are
/// not a regular sequence.
SL2Quotient koszul_quotient_series(const SL2Module& v, Index bound, const SL2QuotientOptions& options = {});

}  // namespace symquot
