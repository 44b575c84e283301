#pragma once

#include "symquot/scalar.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace symquot {

/// Sparse homogeneous quadratic form sum c_{ij} x_i x_j over i <= j.
template <typename Scalar>
class QuadraticForm {
 public:
  using Key = std::pair<Index, Index>;
  using Terms = std::map<Key, Scalar>;

  QuadraticForm() = default;

  void add(Index i, Index j, const Scalar& c) {
    if (i > j) std::swap(i, j);
    Scalar& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Index i, Index j) const {
    if (i > j) std::swap(i, j);
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Scalar evaluate(const Vector<Scalar>& x) const {
    Scalar acc(0);
    for (const auto& [key, c] : terms_) acc += c * x(key.first) * x(key.second);
    return acc;
  }

  /// Partial derivatives at x, for coordinates 0..size-1.
  Vector<Scalar> gradient(const Vector<Scalar>& x) const {
    Vector<Scalar> g = Vector<Scalar>::Constant(x.size(), Scalar(0));
    for (const auto& [key, c] : terms_) {
      g(key.first) += c * x(key.second);
      g(key.second) += c * x(key.first);
    }
    return g;
  }

  template <typename Other>
  QuadraticForm<Other> cast() const {
    QuadraticForm<Other> out;
    for (const auto& [key, c] : terms_) out.add(key.first, key.second, Other(c));
    return out;
  }

  friend QuadraticForm operator*(const Scalar& s, const QuadraticForm& q) {
    QuadraticForm out;
    for (const auto& [key, c] : q.terms_) out.add(key.first, key.second, s * c);
    return out;
  }

  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
    QuadraticForm out = a;
    for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, c);
    return out;
  }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Names z1..zn, w1..wn for the coordinates of V + V*.
std::vector<std::string> dual_pair_names(Index n);

template <typename Scalar>
std::string to_string(const QuadraticForm<Scalar>& q, const std::vector<std::string>& names) {
  if (q.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : q.terms()) {
    const bool negative = c < 0;
    const Scalar mag = negative ? Scalar(-c) : c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (mag != 1) out << mag << "*";
    if (key.first == key.second)
      out << names[key.first] << "^2";
    else
      out << names[key.first] << "*" << names[key.second];
  }
  return out.str();
}

}  // namespace symquot
