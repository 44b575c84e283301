#pragma once

#include "symquot/errors.hpp"
#include "symquot/polynomial.hpp"
#include "symquot/scalar.hpp"

#include <string>
#include <vector>

namespace symquot {

/// Coefficients of a power series in degrees 0..bound, inclusive.
class TruncatedSeries {
 public:
  /// Requires at least one coefficient.
  explicit TruncatedSeries(IntegerVector coeffs);
  TruncatedSeries(std::initializer_list<long> coeffs);
  static TruncatedSeries zeros(Index bound);

  Index bound() const { return coeffs_.size() - 1; }
  const IntegerVector& coeffs() const { return coeffs_; }
  const Integer& operator[](Index k) const { return coeffs_(k); }
  Integer& operator[](Index k) { return coeffs_(k); }

  /// Prefix up to the given bound, which must not exceed bound().
  TruncatedSeries truncated(Index bound) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

 private:
  IntegerVector coeffs_;
};

/// Truncated product; the result bound is the smaller of the two bounds.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
/// Product with a polynomial, truncated to a's bound.
TruncatedSeries multiply(const TruncatedSeries& a, const Polynomial<Integer>& p);

/// numerator / prod (1 - t^e) over a multiset of positive exponents e.
class HilbertSeries {
 public:
  HilbertSeries() : HilbertSeries(Polynomial<Integer>::constant(1), {}) {}
  HilbertSeries(Polynomial<Integer> numerator, std::vector<Index> denominator);

  const Polynomial<Integer>& numerator() const { return numerator_; }
  /// Sorted ascending.
  const std::vector<Index>& denominator() const { return denominator_; }
  Index denominator_degree() const;
  bool is_zero() const { return numerator_.is_zero(); }

  /// Pole order at t = 1.
  Index dimension() const;
  /// deg(numerator) - sum(e).
  Index a_invariant() const;

  /// Same numerator and denominator multiset; see equivalent() for equality as functions.
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  Polynomial<Integer> numerator_;
  std::vector<Index> denominator_;
};

/// A truncated series that no numerator over the given denominator reproduces.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, TruncatedSeries series)
      : std::runtime_error(what), series_(std::move(series)) {}
  const TruncatedSeries& series() const { return series_; }

 private:
  TruncatedSeries series_;
};

constexpr Index kDefaultGuard = 4;

TruncatedSeries expand(const HilbertSeries& h, Index bound);

/// Recovers numerator = s * prod(1 - t^e). Coefficients in degrees above
/// s.bound() - guard must vanish; throws ReconstructionError otherwise and
/// PreconditionError when s is too short.
HilbertSeries reconstruct(const TruncatedSeries& s, const std::vector<Index>& denominator,
                          Index guard = kDefaultGuard);

/// Divides out (1 - t^e) factors shared by numerator and denominator.
HilbertSeries canonical(const HilbertSeries& h);

HilbertSeries product(const HilbertSeries& a, const HilbertSeries& b);

/// Equality as rational functions.
bool equivalent(const HilbertSeries& a, const HilbertSeries& b);

/// Product of (1 - t^e) over the multiset.
Polynomial<Integer> denominator_polynomial(const std::vector<Index>& exponents);

/// "numerator / (1-t^e1)(1-t^e2)..." with repeated factors as powers.
std::string to_string(const HilbertSeries& h);
std::string to_string(const TruncatedSeries& s);

}  // namespace symquot
