#pragma once

#include "symquot/certify.hpp"
#include "symquot/quadratic_form.hpp"
#include "symquot/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symquot {

/// Weights of a torus module: rows index the torus factors, columns the coordinates.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(IntegerMatrix entries) : entries_(std::move(entries)) {}
  WeightMatrix(std::initializer_list<std::initializer_list<long>> rows);
  /// A rank-0 torus acting on n coordinates.
  static WeightMatrix trivial(Index n) { return WeightMatrix(IntegerMatrix(0, n)); }
  static WeightMatrix identity(Index n) { return WeightMatrix(IntegerMatrix(IntegerMatrix::Identity(n, n))); }

  Index torus_rank() const { return entries_.rows(); }
  Index dimension() const { return entries_.cols(); }
  const IntegerMatrix& entries() const { return entries_; }
  const Integer& operator()(Index i, Index j) const { return entries_(i, j); }

  WeightMatrix columns(const std::vector<Index>& cols) const;

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.entries_.rows() == b.entries_.rows() && a.entries_.cols() == b.entries_.cols() &&
           a.entries_ == b.entries_;
  }

 private:
  IntegerMatrix entries_;
};

/// Components sum_j a_ij z_j w_j; coordinate j is z_{j+1}, coordinate n + j is w_{j+1}.
std::vector<QuadraticForm<Integer>> moment_components(const WeightMatrix& a);

/// Columns j admitting c >= 0 with c_j > 0 and A c = 0.
std::vector<bool> lineality_columns(const WeightMatrix& a);
bool is_stable(const WeightMatrix& a);

struct ReductionTrace {
  /// Nonzero columns in the lineality part, 0-based, increasing.
  std::vector<Index> kept_columns;
  /// Zero columns (trivial summands), 0-based.
  std::vector<Index> trivial_columns;
  Index removed_trivial_columns() const { return static_cast<Index>(trivial_columns.size()); }
  /// Hermite form rows of the kept columns; full row rank and stable.
  WeightMatrix reduced;
  /// Unimodular U with (U * A[:, kept]).topRows(rank) = reduced.
  IntegerMatrix row_transform;
};

ReductionTrace stable_reduction(const WeightMatrix& a);
/// Applies the recorded column selection and row change to a matrix.
WeightMatrix apply_reduction(const ReductionTrace& trace, const WeightMatrix& a);

/// Largest number of coordinates handled by support enumeration.
constexpr Index kMaxSupportCoordinates = 16;

struct IsotropyStratum {
  Index isotropy_dimension = 0;
  Index dimension = 0;
};

struct TorusLargenessReport {
  bool faithful_up_to_finite = false;
  bool stable = false;
  bool fpig = false;
  /// -1 when 0-modularity fails; n when there are no strata of positive isotropy.
  Index max_k_modular = -1;
  bool one_large = false;
  bool dim_bound_ok = true;
  /// Order of the finite part of the kernel of the action when faithful up to finite.
  std::optional<Integer> finite_kernel_order;
  /// Nonempty strata V_(r), r >= 0.
  std::vector<IsotropyStratum> strata;
};

TorusLargenessReport largeness_report(const WeightMatrix& a);

/// (1 - t^2)^rank / (1 - t)^{2n}; throws PreconditionError unless 0-modular.
HilbertSeries shell_hilbert(const WeightMatrix& a);

struct DpLimits {
  /// Largest number of weight-vector cells kept across all degree layers.
  std::size_t max_cells = 40000000;
};

/// Coefficient d counts monomials z^u w^v of degree d with A(u - v) = 0.
TruncatedSeries invariant_series_dp(const WeightMatrix& a, Index bound, const DpLimits& limits = {});

struct InvariantMonomial {
  IntegerVector z_exponents;
  IntegerVector w_exponents;
  Index degree = 0;
};

/// Minimal generators of degree <= bound of the invariant monomial algebra.
std::vector<InvariantMonomial> minimal_generators(const WeightMatrix& a, Index bound);

enum class Verdict { Yes, No, Undetermined };
std::string to_string(Verdict v);

struct ShellDiagnostics {
  bool complete_intersection = false;
  Index shell_dimension = 0;
  /// Largest dimension of the locus where the differential drops rank; -1 if empty.
  Index singular_dimension = -1;
  Index stratum_count = 0;
  Index singular_stratum_count = 0;
  std::optional<ShellAInvariant> a_invariant;
  Verdict normal = Verdict::Undetermined;
  Verdict rational_singularities = Verdict::Undetermined;
  std::vector<std::string> caveats;
};

ShellDiagnostics shell_diagnostics(const WeightMatrix& a);

enum class ClosedFormSource {
  /// Recovered from the degree-bounded series by reconstruct and matched to the exact form.
  Reconstructed,
  /// Exact lattice computation, verified against the degree-bounded series.
  ExactVerified,
  /// Reconstructed with a caller-supplied denominator.
  SuppliedDenominator,
  /// Reconstructed with a denominator guessed from generator degrees.
  GuessedDenominator,
  None,
};
std::string to_string(ClosedFormSource s);

struct QuotientOptions {
  std::optional<std::vector<Index>> denominators;
  Index guard = kDefaultGuard;
  DpLimits dp_limits;
};

struct TorusQuotient {
  ReductionTrace reduction;
  TruncatedSeries truncated{1};
  std::optional<HilbertSeries> closed_form;
  ClosedFormSource source = ClosedFormSource::None;
  std::optional<GorensteinVerdict> verdict;
  std::string failure;
};

/// Quotient Hilbert series of the stable reduction, with trivial summands multiplied back.
TorusQuotient quotient_series(const WeightMatrix& a, Index bound, const QuotientOptions& options = {});

}  // namespace symquot
