#include "doctest.h"
#include "printers.hpp"

#include "symquot/laurent.hpp"
#include "symquot/polynomial.hpp"
#include "symquot/series.hpp"

#include <random>

using namespace symquot;
using Poly = Polynomial<Integer>;

namespace {

Poly eq7_numerator() { return Poly{1, 0, 2, 3, 2, 2, 3, 2, 0, 1}; }

TruncatedSeries naive_expand(const HilbertSeries& h, Index bound) {
  // Multiplies by each geometric series 1 + t^e + t^2e + ... separately.
  TruncatedSeries s = TruncatedSeries::zeros(bound);
  for (Index k = 0; k <= bound; ++k) s[k] = h.numerator().coefficient(k);
  for (Index e : h.denominator()) {
    TruncatedSeries g = TruncatedSeries::zeros(bound);
    for (Index k = 0; k <= bound; k += e) g[k] = 1;
    s = multiply(s, g);
  }
  return s;
}

}  // namespace

TEST_CASE("polynomial arithmetic and exact division") {
  Poly p{1, 1};
  CHECK(p * p == Poly{1, 2, 1});
  CHECK((p - p).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly{1, 2, 3}.reversed() == Poly{3, 2, 1});
  CHECK(Poly::one_minus_power(3) == Poly{1, 0, 0, -1});
  auto q = divide_exact(Poly{1, 0, -1}, Poly{1, 1});
  REQUIRE(q);
  CHECK(*q == Poly{1, -1});
  CHECK_FALSE(divide_exact(Poly{1, 0, 1}, Poly{1, 1}));
  auto r = divide_by_one_minus_power(Poly{1, 0, 0, 0, -1}, 2);
  REQUIRE(r);
  CHECK(*r == Poly{1, 0, 1});
  CHECK_FALSE(divide_by_one_minus_power(Poly{1, 1}, 2));
  CHECK(multiplicity_at_one(pow(Poly{1, -1}, 3) * Poly{2, 1}) == 3);
  CHECK(to_string(Poly{1, 0, -2, 1}) == "1 - 2*t^2 + t^3");
}

TEST_CASE("expand frozen examples") {
  CHECK(expand(HilbertSeries(Poly{1, 1}, {1}), 3) == TruncatedSeries{1, 2, 2, 2});
  CHECK(expand(HilbertSeries(eq7_numerator(), {2, 2, 3, 6}), 3) == TruncatedSeries{1, 0, 4, 4});
  CHECK(expand(HilbertSeries(), 5) == TruncatedSeries{1, 0, 0, 0, 0, 0});
  CHECK(expand(HilbertSeries(), 0) == TruncatedSeries{1});
  CHECK_THROWS_AS(expand(HilbertSeries(), -1), PreconditionError);
}

TEST_CASE("reconstruct frozen examples") {
  const HilbertSeries h(Poly{1, 0, 1}, {2, 2});
  const HilbertSeries r = reconstruct(expand(h, 10), {2, 2}, 4);
  CHECK(r.numerator() == Poly{1, 0, 1});
  CHECK(r.denominator() == std::vector<Index>{2, 2});

  const HilbertSeries eq7(eq7_numerator(), {2, 2, 3, 6});
  const HilbertSeries back = reconstruct(expand(eq7, 30), {2, 2, 3, 6}, 4);
  CHECK(back.numerator() == eq7_numerator());

  // 1/(1-t) over {2} is representable: (1+t)/(1-t^2).
  const HilbertSeries geometric(Poly{1}, {1});
  const HilbertSeries over_two = reconstruct(expand(geometric, 6), {2}, 4);
  CHECK(over_two.numerator() == Poly{1, 1});
  CHECK(equivalent(over_two, geometric));

  // 1/(1-t)^2 has a double pole at 1 that a single (1-t^2) cannot clear.
  const HilbertSeries double_pole(Poly{1}, {1, 1});
  CHECK_THROWS_AS(reconstruct(expand(double_pole, 8), {2}, 4), ReconstructionError);
  try {
    reconstruct(expand(double_pole, 8), {2}, 4);
  } catch (const ReconstructionError& e) {
    CHECK(e.series() == expand(double_pole, 8));
  }

  CHECK_THROWS_AS(reconstruct(expand(h, 7), {2, 2}, 4), PreconditionError);
  CHECK_THROWS_AS(reconstruct(expand(h, 10), {2, 2}, 0), PreconditionError);
}

TEST_CASE("canonical form, invariants and rendering") {
  const HilbertSeries h(Poly{1, 0, 1} * Poly::one_minus_power(3), {2, 2, 3});
  const HilbertSeries c = canonical(h);
  CHECK(c.numerator() == Poly{1, 0, 1});
  CHECK(c.denominator() == std::vector<Index>{2, 2});
  CHECK(equivalent(c, h));
  CHECK(h.dimension() == 2);
  CHECK(h.a_invariant() == -2);
  CHECK(c.a_invariant() == -2);
  CHECK(to_string(c) == "(1 + t^2) / (1-t^2)^2");
  CHECK(to_string(HilbertSeries(Poly{1}, {1})) == "1 / (1-t)");
  CHECK(to_string(HilbertSeries()) == "1");
  CHECK(to_string(TruncatedSeries{1, 0, 4}) == "[1, 0, 4]");
}

TEST_CASE("round trip and multiplicativity on random series") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Index> den;
    const int factors = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < factors; ++i) den.push_back(1 + static_cast<Index>(rng() % 5));
    Poly::Coefficients num(1 + rng() % 6);
    for (Index k = 0; k < num.size(); ++k) num(k) = Integer(static_cast<long>(rng() % 7) - 1);
    num(0) = 1;
    const HilbertSeries h(Poly(num), den);
    const Index bound = h.denominator_degree() + 12;
    const TruncatedSeries s = expand(h, bound);
    CHECK(s == naive_expand(h, bound));
    const HilbertSeries back = reconstruct(s, h.denominator(), kDefaultGuard);
    CHECK(expand(back, bound) == s);
    CHECK(equivalent(back, h));

    const HilbertSeries other(Poly{1, 1}, {static_cast<Index>(1 + rng() % 3)});
    CHECK(expand(product(h, other), bound) == multiply(s, expand(other, bound)));
    CHECK(equivalent(canonical(h), h));
  }
}

TEST_CASE("laurent characters") {
  const LaurentCharacter chi({{1, 1}, {-1, 1}});
  CHECK(chi.is_symmetric());
  const LaurentCharacter sq = chi * chi;
  CHECK(sq.coefficient(0) == 2);
  CHECK(sq.coefficient(2) == 1);
  CHECK(chi.adams(3).coefficient(3) == 1);
  CHECK_FALSE(LaurentCharacter(LaurentCharacter::Terms{{1, 1}}).is_symmetric());
  CHECK((chi + Integer(-1) * chi).is_zero());
  CHECK(to_string(sq) == "q^2 + 2 + q^-2");
}
