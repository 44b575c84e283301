#pragma once

#include "symquot/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace symquot {

/// Dense univariate polynomial with exact coefficients, trailing zeros trimmed.
/// The zero polynomial has no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  using Coefficients = Vector<Scalar>;

  Polynomial() = default;
  explicit Polynomial(Coefficients coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(static_cast<Index>(coeffs.size())) {
    Index k = 0;
    for (const Scalar& c : coeffs) coeffs_(k++) = c;
    trim();
  }

  static Polynomial constant(const Scalar& c) { return monomial(0, c); }

  static Polynomial monomial(Index k, const Scalar& c = Scalar(1)) {
    Coefficients v = Coefficients::Constant(k + 1, Scalar(0));
    v(k) = c;
    return Polynomial(std::move(v));
  }

  /// 1 - t^e.
  static Polynomial one_minus_power(Index e) {
    Coefficients v = Coefficients::Constant(e + 1, Scalar(0));
    v(0) += Scalar(1);
    v(e) -= Scalar(1);
    return Polynomial(std::move(v));
  }

  Index degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 0; }
  const Coefficients& coefficients() const { return coeffs_; }

  Scalar coefficient(Index k) const {
    return (k >= 0 && k < coeffs_.size()) ? coeffs_(k) : Scalar(0);
  }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_(degree()); }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (Index k = degree(); k >= 0; --k) acc = acc * x + coeffs_(k);
    return acc;
  }

  /// t^deg * p(1/t).
  Polynomial reversed() const { return Polynomial(Coefficients(coeffs_.reverse())); }

  template <typename Other>
  Polynomial<Other> cast() const {
    return Polynomial<Other>(typename Polynomial<Other>::Coefficients(coeffs_.template cast<Other>()));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Coefficients v = Coefficients::Constant(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    v.head(a.coeffs_.size()) += a.coeffs_;
    v.head(b.coeffs_.size()) += b.coeffs_;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a) { return Polynomial(Coefficients(-a.coeffs_)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Coefficients v = Coefficients::Constant(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (Index i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_(i) == 0) continue;
      for (Index j = 0; j < b.coeffs_.size(); ++j) v(i + j) += a.coeffs_(i) * b.coeffs_(j);
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Scalar& c, const Polynomial& a) {
    return Polynomial(Coefficients(a.coeffs_ * c));
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// Multiplies by (1 - t^e) in place.
  Polynomial& mul_one_minus_power(Index e) {
    if (is_zero()) return *this;
    Coefficients v = Coefficients::Constant(coeffs_.size() + e, Scalar(0));
    v.head(coeffs_.size()) = coeffs_;
    v.tail(coeffs_.size()) -= coeffs_;
    coeffs_ = std::move(v);
    trim();
    return *this;
  }

 private:
  void trim() {
    Index n = coeffs_.size();
    while (n > 0 && coeffs_(n - 1) == 0) --n;
    if (n != coeffs_.size()) coeffs_.conservativeResize(n);
  }

  Coefficients coeffs_;
};

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, Index k) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
  for (Index i = 0; i < k; ++i) result *= p;
  return result;
}

/// Exact quotient num / den, or nullopt when den does not divide num.
template <typename Scalar>
std::optional<Polynomial<Scalar>> divide_exact(const Polynomial<Scalar>& num,
                                               const Polynomial<Scalar>& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return Polynomial<Scalar>();
  if (num.degree() < den.degree()) return std::nullopt;
  using Coefficients = typename Polynomial<Scalar>::Coefficients;
  Coefficients rem = num.coefficients();
  const Coefficients& d = den.coefficients();
  const Index dd = den.degree();
  const Scalar lead = den.leading();
  Coefficients q = Coefficients::Constant(num.degree() - dd + 1, Scalar(0));
  for (Index k = num.degree() - dd; k >= 0; --k) {
    const Scalar& top = rem(k + dd);
    if (top == 0) continue;
    Scalar c = top / lead;
    if (c * lead != top) return std::nullopt;
    q(k) = c;
    for (Index j = 0; j <= dd; ++j) rem(k + j) -= c * d(j);
  }
  for (Index k = 0; k < rem.size(); ++k)
    if (rem(k) != 0) return std::nullopt;
  return Polynomial<Scalar>(std::move(q));
}

/// Exact quotient p / (1 - t^e), or nullopt when not divisible.
template <typename Scalar>
std::optional<Polynomial<Scalar>> divide_by_one_minus_power(const Polynomial<Scalar>& p, Index e) {
  if (p.is_zero()) return p;
  if (p.degree() < e) return std::nullopt;
  using Coefficients = typename Polynomial<Scalar>::Coefficients;
  const Index qd = p.degree() - e;
  Coefficients q(qd + 1);
  for (Index k = 0; k <= qd; ++k) q(k) = p.coefficient(k) + (k >= e ? q(k - e) : Scalar(0));
  // Remaining coefficients k > qd must satisfy p_k = q_k - q_{k-e} with q_k = 0.
  for (Index k = qd + 1; k <= p.degree(); ++k) {
    Scalar expected = k - e <= qd && k - e >= 0 ? Scalar(-q(k - e)) : Scalar(0);
    if (p.coefficient(k) != expected) return std::nullopt;
  }
  return Polynomial<Scalar>(std::move(q));
}

/// Number of times (1 - t) divides p; p must be nonzero.
template <typename Scalar>
Index multiplicity_at_one(Polynomial<Scalar> p) {
  Index m = 0;
  while (!p.is_zero()) {
    auto q = divide_by_one_minus_power(p, 1);
    if (!q) break;
    p = std::move(*q);
    ++m;
  }
  return m;
}

/// Renders p as e.g. "1 + 2*t^2 - t^3".
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (Index k = 0; k <= p.degree(); ++k) {
    Scalar c = p.coefficient(k);
    if (c == 0) continue;
    bool negative = c < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace symquot
