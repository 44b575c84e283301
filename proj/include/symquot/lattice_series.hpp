#pragma once

#include "symquot/series.hpp"

#include <cstddef>
#include <vector>

namespace symquot {

struct LatticeSeriesLimits {
  std::size_t max_circuits = 20000;
  std::size_t max_cells = 2000000;
  std::size_t max_points = 50000000;
};

/// Primitive vectors of minimal support in ker(A), with both signs, in a
/// deterministic order.
std::vector<IntegerVector> kernel_circuits(const IntegerMatrix& a);

/// Closed form of sum over x in ker_Z(A) of t^{|x|_1}, divided by
/// (1 - t^2)^extra_quadratic_poles. Every column of A must admit a kernel
/// vector that is nonzero in that coordinate. Throws CapacityError beyond limits.
HilbertSeries kernel_norm_series(const IntegerMatrix& a, Index extra_quadratic_poles = 0,
                                 const LatticeSeriesLimits& limits = {});

}  // namespace symquot
