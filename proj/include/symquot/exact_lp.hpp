#pragma once

#include "symquot/scalar.hpp"

namespace symquot {

/// Decides whether A x = b has a solution x >= 0, by phase-one simplex over the
/// rationals with Bland's rule.
bool has_nonnegative_solution(const RationalMatrix& a, const RationalVector& b);

}  // namespace symquot
