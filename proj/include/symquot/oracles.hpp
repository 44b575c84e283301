#pragma once

#include "symquot/series.hpp"
#include "symquot/sl2.hpp"
#include "symquot/torus.hpp"

#include <vector>

namespace symquot {

/// Counts invariant monomials z^u w^v by direct enumeration of all monomials.
TruncatedSeries brute_force_invariant_series(const WeightMatrix& a, Index bound);

/// Invariant monomials of degree <= bound that are not products of two
/// nonconstant invariant monomials, by direct enumeration.
std::vector<InvariantMonomial> brute_force_minimal_generators(const WeightMatrix& a, Index bound);

/// Counts x in ker_Z(A) with |x|_1 = k for k <= bound.
TruncatedSeries brute_force_kernel_norms(const WeightMatrix& a, Index bound);

/// Number of R_m summands in Sym^k(V + V*) for k <= bound, as the kernel
/// dimension of e on the weight-m monomials (exact rank over the integers).
TruncatedSeries brute_force_sl2_multiplicities(const SL2Module& v, long m, Index bound);

}  // namespace symquot
