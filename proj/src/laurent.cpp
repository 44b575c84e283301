#include "symquot/laurent.hpp"

#include "symquot/errors.hpp"

#include <sstream>

namespace symquot {

LaurentCharacter::LaurentCharacter(Terms terms) : terms_(std::move(terms)) { prune(); }

void LaurentCharacter::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

Integer LaurentCharacter::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentCharacter::is_symmetric() const {
  for (const auto& [m, c] : terms_)
    if (coefficient(-m) != c) return false;
  return true;
}

LaurentCharacter LaurentCharacter::adams(long k) const {
  Terms out;
  for (const auto& [m, c] : terms_) out[m * k] += c;
  return LaurentCharacter(std::move(out));
}

LaurentCharacter operator+(const LaurentCharacter& a, const LaurentCharacter& b) {
  LaurentCharacter out = a;
  out += b;
  return out;
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& b) {
  for (const auto& [m, c] : b.terms_) terms_[m] += c;
  prune();
  return *this;
}

LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b) {
  LaurentCharacter::Terms out;
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) out[m1 + m2] += c1 * c2;
  return LaurentCharacter(std::move(out));
}

LaurentCharacter operator*(const Integer& c, const LaurentCharacter& a) {
  LaurentCharacter::Terms out;
  for (const auto& [m, x] : a.terms_) out[m] = c * x;
  return LaurentCharacter(std::move(out));
}

LaurentCharacter LaurentCharacter::divided_by(const Integer& c) const {
  Terms out;
  for (const auto& [m, x] : terms_) {
    if (x % c != 0) throw PreconditionError("character coefficient not divisible");
    out[m] = x / c;
  }
  return LaurentCharacter(std::move(out));
}

std::string to_string(const LaurentCharacter& chi, const std::string& var) {
  if (chi.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = chi.terms().rbegin(); it != chi.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (m == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << var;
    if (m != 1) out << "^" << m;
  }
  return out.str();
}

}  // namespace symquot
