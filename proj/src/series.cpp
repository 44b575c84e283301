#include "symquot/series.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace symquot {

std::int64_t to_int64(const Integer& value) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  if (value < lo || value > hi) throw CapacityError("integer exceeds 64-bit range: " + value.str());
  return value.convert_to<std::int64_t>();
}

TruncatedSeries::TruncatedSeries(IntegerVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) throw PreconditionError("truncated series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs)
    : coeffs_(static_cast<Index>(coeffs.size())) {
  if (coeffs_.size() == 0) throw PreconditionError("truncated series needs at least one coefficient");
  Index k = 0;
  for (long c : coeffs) coeffs_(k++) = Integer(c);
}

TruncatedSeries TruncatedSeries::zeros(Index bound) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  return TruncatedSeries(IntegerVector::Constant(bound + 1, Integer(0)));
}

TruncatedSeries TruncatedSeries::truncated(Index bound) const {
  if (bound < 0 || bound > this->bound()) throw PreconditionError("truncation bound out of range");
  return TruncatedSeries(IntegerVector(coeffs_.head(bound + 1)));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Index bound = std::min(a.bound(), b.bound());
  TruncatedSeries out = TruncatedSeries::zeros(bound);
  for (Index i = 0; i <= bound; ++i) {
    if (a[i] == 0) continue;
    for (Index j = 0; i + j <= bound; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries multiply(const TruncatedSeries& a, const Polynomial<Integer>& p) {
  TruncatedSeries out = TruncatedSeries::zeros(a.bound());
  for (Index i = 0; i <= p.degree() && i <= a.bound(); ++i) {
    const Integer c = p.coefficient(i);
    if (c == 0) continue;
    for (Index j = 0; i + j <= a.bound(); ++j) out[i + j] += c * a[j];
  }
  return out;
}

HilbertSeries::HilbertSeries(Polynomial<Integer> numerator, std::vector<Index> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (Index e : denominator_)
    if (e <= 0) throw PreconditionError("denominator exponents must be positive");
  std::sort(denominator_.begin(), denominator_.end());
}

Index HilbertSeries::denominator_degree() const {
  return std::accumulate(denominator_.begin(), denominator_.end(), Index(0));
}

Index HilbertSeries::dimension() const {
  if (is_zero()) throw PreconditionError("the zero series has no dimension");
  return static_cast<Index>(denominator_.size()) - multiplicity_at_one(numerator_);
}

Index HilbertSeries::a_invariant() const {
  if (is_zero()) throw PreconditionError("the zero series has no a-invariant");
  return numerator_.degree() - denominator_degree();
}

TruncatedSeries expand(const HilbertSeries& h, Index bound) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  TruncatedSeries s = TruncatedSeries::zeros(bound);
  for (Index k = 0; k <= bound && k <= h.numerator().degree(); ++k) s[k] = h.numerator().coefficient(k);
  for (Index e : h.denominator())
    for (Index k = e; k <= bound; ++k) s[k] += s[k - e];
  return s;
}

HilbertSeries reconstruct(const TruncatedSeries& s, const std::vector<Index>& denominator, Index guard) {
  if (guard < 1) throw PreconditionError("reconstruction guard must be at least 1");
  for (Index e : denominator)
    if (e <= 0) throw PreconditionError("denominator exponents must be positive");
  const Index total = std::accumulate(denominator.begin(), denominator.end(), Index(0));
  if (s.bound() < total + guard)
    throw PreconditionError("truncated series of degree " + std::to_string(s.bound()) +
                            " is too short for denominator degree " + std::to_string(total) +
                            " with guard " + std::to_string(guard));
  TruncatedSeries cleared = s;
  for (Index e : denominator)
    for (Index k = cleared.bound(); k >= e; --k) cleared[k] -= cleared[k - e];
  const Index cutoff = s.bound() - guard;
  for (Index k = cutoff + 1; k <= s.bound(); ++k)
    if (cleared[k] != 0)
      throw ReconstructionError("no numerator over the denominator reproduces the series (degree " +
                                    std::to_string(k) + " residue " + cleared[k].str() + ")",
                                s);
  return HilbertSeries(Polynomial<Integer>(IntegerVector(cleared.coeffs().head(cutoff + 1))), denominator);
}

HilbertSeries canonical(const HilbertSeries& h) {
  Polynomial<Integer> num = h.numerator();
  std::vector<Index> den = h.denominator();
  if (num.is_zero()) return HilbertSeries(num, {});
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = den.rbegin(); it != den.rend(); ++it) {
      if (auto q = divide_by_one_minus_power(num, *it)) {
        num = std::move(*q);
        den.erase(std::next(it).base());
        changed = true;
        break;
      }
    }
  }
  return HilbertSeries(std::move(num), std::move(den));
}

HilbertSeries product(const HilbertSeries& a, const HilbertSeries& b) {
  std::vector<Index> den = a.denominator();
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return HilbertSeries(a.numerator() * b.numerator(), std::move(den));
}

Polynomial<Integer> denominator_polynomial(const std::vector<Index>& exponents) {
  Polynomial<Integer> p = Polynomial<Integer>::constant(1);
  for (Index e : exponents) p.mul_one_minus_power(e);
  return p;
}

bool equivalent(const HilbertSeries& a, const HilbertSeries& b) {
  return a.numerator() * denominator_polynomial(b.denominator()) ==
         b.numerator() * denominator_polynomial(a.denominator());
}

std::string to_string(const HilbertSeries& h) {
  std::ostringstream out;
  Index terms = 0;
  for (Index k = 0; k <= h.numerator().degree(); ++k) terms += h.numerator().coefficient(k) != 0;
  const bool parens = terms > 1;
  if (h.denominator().empty()) return to_string(h.numerator());
  out << (parens ? "(" : "") << to_string(h.numerator()) << (parens ? ")" : "") << " / ";
  std::map<Index, Index> counts;
  for (Index e : h.denominator()) ++counts[e];
  bool first = true;
  for (auto [e, m] : counts) {
    if (!first) out << " ";
    first = false;
    out << "(1-t";
    if (e > 1) out << "^" << e;
    out << ")";
    if (m > 1) out << "^" << m;
  }
  return out.str();
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream out;
  out << "[";
  for (Index k = 0; k <= s.bound(); ++k) out << (k ? ", " : "") << s[k];
  out << "]";
  return out.str();
}

}  // namespace symquot
