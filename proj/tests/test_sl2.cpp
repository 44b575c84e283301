#include "doctest.h"
#include "printers.hpp"

#include "symquot/errors.hpp"
#include "symquot/integer_linalg.hpp"
#include "symquot/oracles.hpp"
#include "symquot/sl2.hpp"
#include "symquot/torus.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace symquot;
using Poly = Polynomial<Integer>;

namespace {

Poly poly(std::initializer_list<long> c) {
  IntegerVector v(static_cast<Index>(c.size()));
  Index i = 0;
  for (long x : c) v(i++) = x;
  return Poly(v);
}

/// All modules sum (d_i + 1) = n with d_i >= 1, as partitions into parts >= 2.
void modules_of_dimension(Index n, Index max_part, std::vector<Index>& parts, std::vector<SL2Module>& out) {
  if (n == 0) {
    if (!parts.empty()) out.emplace_back(parts);
    return;
  }
  for (Index p = std::min(n, max_part); p >= 2; --p) {
    parts.push_back(p - 1);
    modules_of_dimension(n - p, p, parts, out);
    parts.pop_back();
  }
}

std::vector<SL2Module> modules_up_to(Index n) {
  std::vector<SL2Module> out;
  std::vector<Index> parts;
  for (Index k = 1; k <= n; ++k) modules_of_dimension(k, k, parts, out);
  return out;
}

IntegerMatrix commutator(const IntegerMatrix& a, const IntegerMatrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("module labels and dimensions") {
  const SL2Module v{1, 2, 0};
  CHECK(v.irreps() == std::vector<Index>{2, 1, 0});
  CHECK(v.dimension() == 6);
  CHECK(v.trivial_count() == 1);
  CHECK(v.nontrivial_part() == SL2Module{2, 1});
  CHECK(to_string(SL2Module{2, 1}) == "R2+R1");
  CHECK(to_string(SL2Module{1, 1, 1}) == "3R1");
  CHECK(to_string(SL2Module{}) == "0");
  CHECK_THROWS_AS(SL2Module({-1}), PreconditionError);
}

TEST_CASE("characters and multiplicities") {
  CHECK(character(2) == LaurentCharacter(LaurentCharacter::Terms{{2, 1}, {0, 1}, {-2, 1}}));
  CHECK(to_string(character(2)) == "q^2 + 1 + q^-2");
  const LaurentCharacter tensor = character(1) * character(1);
  CHECK(multiplicity(tensor, 0) == 1);
  CHECK(multiplicity(tensor, 2) == 1);
  CHECK(multiplicity(character(3) * character(3), 6) == 1);
  CHECK(multiplicity(character(3) * character(3), 4) == 1);
  CHECK(multiplicity(character(3) * character(3), 5) == 0);
  CHECK_THROWS_AS(multiplicity(LaurentCharacter(LaurentCharacter::Terms{{1, 1}}), 0), PreconditionError);
}

TEST_CASE("symmetric powers of a single irreducible") {
  // Sym^2 R1 = R2, Sym^2 R2 = R4 + R0, Sym^3 R2 = R6 + R2.
  const auto s1 = sym_power_characters(character(1), 3);
  CHECK(s1[2] == character(2));
  CHECK(s1[3] == character(3));
  const auto s2 = sym_power_characters(character(2), 3);
  CHECK(s2[0] == LaurentCharacter::constant(1));
  CHECK(s2[2] == character(4) + character(0));
  CHECK(s2[3] == character(6) + character(2));
}

TEST_CASE("2R1 has six quadratic invariants") {
  const ABSeries ab = ab_series(SL2Module{1, 1}, 6);
  CHECK(ab.a[2] == 6);
  CHECK(ab.a[1] == 0);
}

TEST_CASE("invariant counts agree with the highest-weight oracle") {
  for (const SL2Module& v : {SL2Module{1}, SL2Module{2}, SL2Module{1, 1}, SL2Module{2, 1}, SL2Module{3},
                             SL2Module{1, 1, 1}, SL2Module{2, 2}, SL2Module{2, 0}}) {
    CAPTURE(to_string(v));
    const Index bound = v.dimension() <= 3 ? 5 : 4;
    const ABSeries ab = ab_series(v, bound);
    CHECK(ab.a == brute_force_sl2_multiplicities(v, 0, bound));
    CHECK(ab.b == brute_force_sl2_multiplicities(v, 2, bound));
  }
  CHECK(ab_series(SL2Module{2, 1}, 2).a[2] == 4);
}

TEST_CASE("rep matrices satisfy the sl2 relations") {
  for (Index d = 0; d <= 12; ++d) {
    CAPTURE(d);
    const RepTriple r = rep_matrices(d);
    CHECK(commutator(r.e, r.f) == r.h);
    CHECK(commutator(r.h, r.e) == Integer(2) * r.e);
    CHECK(commutator(r.h, r.f) == Integer(-2) * r.f);
  }
}

TEST_CASE("moment components of R1 in standard coordinates") {
  const auto comps = moment_components_sl2(SL2Module{1});
  REQUIRE(comps.size() == 3);
  const auto names = dual_pair_names(2);
  CHECK(to_string(comps[0], names) == "z1*w2");
  CHECK(to_string(comps[1], names) == "z2*w1");
  CHECK(to_string(comps[2], names) == "z1*w1 - z2*w2");
}

TEST_CASE("moment components of R2+R1 in weight coordinates") {
  // New coordinates: z2 z0 z-2 x y, then z2' z0' z-2' x' y'.
  enum { z2, z0, zm2, x, y, z2p, z0p, zm2p, xp, yp };
  QuadraticForm<Rational> mu1, mu2, mu3;
  mu1.add(x, xp, 1);
  mu1.add(z0, z2p, 1);
  mu1.add(z2, z0p, -1);
  mu2.add(x, yp, 1);
  mu2.add(y, xp, 1);
  mu2.add(zm2, z2p, 2);
  mu2.add(z2, zm2p, -2);
  mu3.add(y, yp, 1);
  mu3.add(zm2, z0p, 1);
  mu3.add(z0, zm2p, -1);
  const auto comps = weight_moment_components(SL2Module{2, 1});
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == mu1);
  CHECK(comps[1] == mu2);
  CHECK(comps[2] == mu3);
}

TEST_CASE("weight coordinate change is invertible") {
  const RationalMatrix m = weight_coordinate_change(SL2Module{3, 2, 1});
  CHECK(exact_determinant(m) != 0);
}

TEST_CASE("classification of small modules") {
  const std::set<std::vector<Index>> not_two_large{{1}, {1, 1}, {1, 1, 1}, {2}, {2, 2}, {2, 1}, {3}, {4}};
  const std::set<std::vector<Index>> not_one_large{{1}, {1, 1}, {2}};
  const std::set<std::vector<Index>> not_zero_modular{{1}, {2}};
  Index seen = 0;
  for (const SL2Module& v : modules_up_to(10)) {
    CAPTURE(to_string(v));
    const SL2Classification c = classify_largeness(v);
    CHECK(c.two_large == !not_two_large.count(v.irreps()));
    CHECK(c.one_large == !not_one_large.count(v.irreps()));
    CHECK(c.zero_modular == !not_zero_modular.count(v.irreps()));
    if (c.two_large) CHECK(c.one_large);
    ++seen;
  }
  CHECK(seen == 41);
  CHECK_FALSE(classify_largeness(SL2Module{1, 0, 0}).zero_modular);
  CHECK_THROWS_AS(classify_largeness(SL2Module{0, 0}), PreconditionError);
}

TEST_CASE("Jacobian probe separates complete intersections") {
  const JacobianProbe ci = jacobian_rank_probe(SL2Module{1, 1, 1}, 4, 7);
  CHECK(ci.generic_rank == 3);
  CHECK(ci.shell_rank == 3);
  CHECK(ci.shell_dimension_estimate == 9);
  CHECK(ci.probabilistic);
  CHECK(jacobian_rank_probe(SL2Module{1}, 4, 7).shell_rank < 3);
  CHECK(jacobian_rank_probe(SL2Module{2}, 4, 7).shell_rank < 3);
  CHECK(jacobian_rank_probe(SL2Module{3}, 4, 7).shell_rank == 3);
}

TEST_CASE("Koszul series of 2R2") {
  const SL2Quotient q = koszul_quotient_series(SL2Module{2, 2}, 24);
  REQUIRE(q.closed_form);
  CHECK(*q.closed_form == HilbertSeries(poly({1, 0, 4, 0, 4, 0, 1}), {2, 2, 2, 2, 2, 2}));
  REQUIRE(q.verdict);
  CHECK(q.verdict->graded_gorenstein);
  CHECK(q.verdict->a_invariant == -6);
  CHECK(q.caveats.empty());
}

TEST_CASE("Koszul series of 3R1") {
  const SL2Quotient q = koszul_quotient_series(SL2Module{1, 1, 1}, 24);
  REQUIRE(q.closed_form);
  CHECK(*q.closed_form == HilbertSeries(poly({1, 0, 9, 0, 9, 0, 1}), {2, 2, 2, 2, 2, 2}));
  CHECK(q.verdict->a_invariant == -6);
  CHECK(q.verdict->graded_gorenstein);
}

TEST_CASE("Koszul series of R2+R1") {
  const HilbertSeries expected(poly({1, 0, 2, 3, 2, 2, 3, 2, 0, 1}), {2, 2, 3, 6});
  SL2QuotientOptions supplied;
  supplied.denominators = std::vector<Index>{2, 2, 3, 6};
  const SL2Quotient q = koszul_quotient_series(SL2Module{2, 1}, 30, supplied);
  REQUIRE(q.closed_form);
  CHECK(q.denominator_supplied);
  CHECK(*q.closed_form == expected);
  CHECK(q.verdict->graded_gorenstein);
  CHECK(q.verdict->a_invariant == -4);
  CHECK(q.verdict->dimension == 4);

  const SL2Quotient searched = koszul_quotient_series(SL2Module{2, 1}, 30);
  REQUIRE(searched.closed_form);
  CHECK(equivalent(*searched.closed_form, expected));
  CHECK(searched.truncated == expand(expected, 30));
}

TEST_CASE("2R1 naive quotient carries caveats") {
  const SL2Quotient q = koszul_quotient_series(SL2Module{1, 1}, 24);
  CHECK(q.truncated[2] == 6);
  CHECK(std::any_of(q.caveats.begin(), q.caveats.end(),
                    [](const std::string& c) { return c.find("not 1-large") != std::string::npos; }));
  REQUIRE(q.verdict);
  CHECK(q.verdict->cohen_macaulay_caveat);
}

TEST_CASE("R1 and R2 are rejected") {
  CHECK_THROWS_AS(koszul_quotient_series(SL2Module{1}, 10), PreconditionError);
  CHECK_THROWS_AS(koszul_quotient_series(SL2Module{2, 0}, 10), PreconditionError);
}

TEST_CASE("trivial summands multiply by 1/(1-t)^2") {
  const SL2Quotient base = koszul_quotient_series(SL2Module{2, 1}, 20);
  const SL2Quotient padded = koszul_quotient_series(SL2Module{2, 1, 0}, 20);
  REQUIRE(base.closed_form);
  REQUIRE(padded.closed_form);
  CHECK(equivalent(*padded.closed_form, product(*base.closed_form, HilbertSeries(Poly::constant(1), {1, 1}))));
  CHECK(padded.verdict->a_invariant == *base.verdict->a_invariant - 2);
  const SL2Quotient only_trivial = koszul_quotient_series(SL2Module{0}, 6);
  CHECK(only_trivial.truncated == TruncatedSeries{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("Koszul truncations are prefix stable") {
  for (const SL2Module& v : {SL2Module{2, 1}, SL2Module{3}, SL2Module{1, 1, 1, 1}, SL2Module{3, 1}}) {
    CAPTURE(to_string(v));
    const TruncatedSeries longer = koszul_quotient_series(v, 26).truncated;
    for (Index d : {0, 5, 12, 20}) CHECK(koszul_quotient_series(v, d).truncated == longer.truncated(d));
  }
}

TEST_CASE("1-large modules with closed forms are Gorenstein") {
  for (const SL2Module& v : {SL2Module{3}, SL2Module{4}, SL2Module{1, 1, 1, 1}, SL2Module{3, 1}}) {
    CAPTURE(to_string(v));
    const SL2Quotient q = koszul_quotient_series(v, 30);
    REQUIRE(q.closed_form);
    CHECK(q.verdict->graded_gorenstein);
    CHECK(q.verdict->dimension == 2 * v.dimension() - 6);
    CHECK(q.truncated == expand(*q.closed_form, 30));
  }
}

TEST_CASE("too short a truncation reports failure with the series") {
  const SL2Quotient q = koszul_quotient_series(SL2Module{2, 2, 2}, 12);
  CHECK_FALSE(q.closed_form);
  CHECK_FALSE(q.failure.empty());
  CHECK(q.truncated.bound() == 12);
}

TEST_CASE("supplied denominator that does not fit") {
  SL2QuotientOptions options;
  options.denominators = std::vector<Index>{2};
  const SL2Quotient q = koszul_quotient_series(SL2Module{2, 2}, 20, options);
  CHECK_FALSE(q.closed_form);
  CHECK_FALSE(q.failure.empty());
}

TEST_CASE("SL2 and torus Koszul sums agree on the diagonal torus") {
  // Restricting to the maximal torus of weight q, R_d has weights d, d-2, ..., -d. The torus
  // quotient series of that weight vector is the Koszul sum for an abelian group of rank 1.
  for (const SL2Module& v : {SL2Module{1, 1, 1}, SL2Module{2, 1}, SL2Module{3}}) {
    CAPTURE(to_string(v));
    IntegerMatrix row(1, v.dimension());
    Index j = 0;
    for (Index d : v.irreps())
      for (Index k = 0; k <= d; ++k) row(0, j++) = d - 2 * k;
    const WeightMatrix a(row);
    const Index bound = 8;
    const TruncatedSeries torus_invariants = brute_force_invariant_series(a, bound);
    const auto chars = sym_power_characters(v, bound);
    for (Index k = 0; k <= bound; ++k) CHECK(chars[k].coefficient(0) == torus_invariants[k]);
  }
}
