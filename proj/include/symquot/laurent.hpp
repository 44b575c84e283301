#pragma once

#include "symquot/scalar.hpp"

#include <map>
#include <string>

namespace symquot {

/// Finite Laurent polynomial in one weight variable q with integer coefficients.
class LaurentCharacter {
 public:
  using Terms = std::map<long, Integer>;

  LaurentCharacter() = default;
  explicit LaurentCharacter(Terms terms);

  static LaurentCharacter constant(const Integer& c) { return LaurentCharacter(Terms{{0, c}}); }

  const Terms& terms() const { return terms_; }
  Integer coefficient(long exponent) const;
  bool is_zero() const { return terms_.empty(); }
  /// coeff(m) == coeff(-m) for all m.
  bool is_symmetric() const;

  /// q -> q^k.
  LaurentCharacter adams(long k) const;

  friend LaurentCharacter operator+(const LaurentCharacter& a, const LaurentCharacter& b);
  friend LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b);
  friend LaurentCharacter operator*(const Integer& c, const LaurentCharacter& a);
  LaurentCharacter& operator+=(const LaurentCharacter& b);
  /// Exact division of every coefficient; throws if some coefficient is not divisible.
  LaurentCharacter divided_by(const Integer& c) const;

  friend bool operator==(const LaurentCharacter&, const LaurentCharacter&) = default;

 private:
  void prune();
  Terms terms_;
};

std::string to_string(const LaurentCharacter& chi, const std::string& var = "q");

}  // namespace symquot
