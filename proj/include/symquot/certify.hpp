#pragma once

#include "symquot/series.hpp"

#include <optional>

namespace symquot {

/// Outcome of Stanley's functional-equation test on a Hilbert series.
struct GorensteinVerdict {
  Index dimension = 0;
  std::optional<Index> a_invariant;
  bool functional_equation_holds = false;
  bool graded_gorenstein = false;
  /// Set when the Cohen-Macaulay domain hypothesis is not guaranteed by the caller,
  /// so the verdict describes the series only.
  bool cohen_macaulay_caveat = false;
};

/// Checks H(1/t) = (-1)^d t^{-a} H(t) exactly. Throws PreconditionError on the zero series.
GorensteinVerdict stanley_check(const HilbertSeries& h, bool cohen_macaulay_guaranteed = true);

struct ShellAInvariant {
  Index value = 0;
  /// Negative values leave rational singularities possible; zero or positive values rule them out.
  bool rational_singularities_possible = false;
};

/// a-invariant 2*rank - 2*n of the complete-intersection shell.
ShellAInvariant shell_a_invariant(Index rank, Index n);

}  // namespace symquot
