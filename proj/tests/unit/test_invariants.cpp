#include <doctest.h>

#include <random>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "factorinv/block_monoid.hpp"
#include "factorinv/corpus.hpp"
#include "factorinv/factorizations.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/presentations.hpp"

using namespace factorinv;
using testing_helpers::vectors;
using testing_helpers::Vec;

namespace {

Monoid parity3() { return Monoid(AffineMonoid(3, {{{1, 0, 1}, 2, 0}, {{0, 1, 1}, 2, 0}}, {})); }

/// c_equal(a) and c_adj(a) straight from their definitions.
std::pair<Int, Int> equal_and_adjacent(const std::vector<Vec>& zs) {
  std::map<Int, std::vector<Vec>> by_length;
  for (const auto& z : zs) by_length[oracle::length(z)].push_back(z);
  Int equal = 0;
  Int adjacent = 0;
  const std::vector<Vec>* previous = nullptr;
  for (const auto& [len, group] : by_length) {
    equal = std::max(equal, oracle::catenary_element(group));
    if (previous) {
      Int best = -1;
      for (const auto& x : *previous) {
        for (const auto& y : group) {
          const Int d = oracle::distance(x, y);
          if (best < 0 || d < best) best = d;
        }
      }
      adjacent = std::max(adjacent, best);
    }
    previous = &group;
  }
  return {equal, adjacent};
}

}  // namespace

TEST_CASE("omega of the parity monoid") {
  Monoid m = parity3();
  CHECK(omega_element(m, {1, 1, 1}) == 3);
  CHECK(omega_element(m, {2, 0, 0}) == 2);
  CHECK(omega_element(m, {0, 2, 0}) == 2);
  CHECK(omega_element(m, {0, 0, 2}) == 2);
  CHECK(omega_element(m, {0, 0, 0}) == 0);
  CHECK(omega(m) == 3);
}

TEST_CASE("omega of numerical monoids") {
  CHECK(omega(Monoid(NumericalMonoid({19, 46, 391}))) == 23);
  CHECK(omega(Monoid(NumericalMonoid({6, 7, 15}))) == 6);
  CHECK(omega(Monoid(NumericalMonoid({2, 3}))) == 3);
  CHECK(omega_per_atom(Monoid(NumericalMonoid({2, 3}))) == Vec{2, 3});
}

TEST_CASE("omega agrees with its atom-restricted characterization") {
  std::vector<Monoid> monoids{Monoid(NumericalMonoid({2, 3})), Monoid(NumericalMonoid({3, 5, 7})),
                              Monoid(NumericalMonoid({5, 6, 9})), parity3()};
  for (const auto& m : monoids) {
    const Int w = omega(m);
    for (std::size_t i = 0; i < m.rank(); ++i) {
      CAPTURE(m.to_string());
      CAPTURE(i);
      const Int expected = omega_element(m, m.atom(i));
      CHECK(oracle::omega_element_atomic(m, m.atom(i), w + 1) == expected);
      CHECK(oracle::omega_element_boxed(m, m.atom(i), w + 1) == expected);
    }
  }
}

TEST_CASE("per-element catenary degree") {
  Monoid m{NumericalMonoid({2, 3})};
  CHECK(catenary_element(m, {3}) == 0);
  CHECK(catenary_element(m, {6}) == 3);
  CHECK(catenary_element(Monoid(NumericalMonoid({5, 7, 9})), {25}) == 5);
  std::vector<Factorization> none;
  CHECK(bottleneck(none) == 0);
}

TEST_CASE("global catenary degree") {
  CHECK(catenary(Monoid(NumericalMonoid({2, 3}))) == 3);
  CHECK(catenary(Monoid(NumericalMonoid({5, 7, 9}))) == 5);
  CHECK(catenary(ZeroSumMonoid(FiniteAbelianGroup::parse("C3")).monoid()) == 3);
  CHECK(catenary(Monoid(AffineMonoid(2, {}, {}))) == 0);
}

TEST_CASE("three-generator closed form") {
  auto table = catenary_three_coprime_formula(NumericalMonoid({5, 7, 9}));
  CHECK(table.c == std::array<Int, 3>{5, 2, 3});
  CHECK(table.value == 5);
  CHECK(table.value == catenary(Monoid(NumericalMonoid({5, 7, 9}))));
  CHECK_THROWS_AS(catenary_three_coprime_formula(NumericalMonoid({2, 3})), DomainError);
  CHECK_THROWS_AS(catenary_three_coprime_formula(NumericalMonoid({6, 7, 15})), DomainError);
}

TEST_CASE("per-element catenary family") {
  Monoid m{NumericalMonoid({2, 3})};
  auto six = catenary_family_element(m, {6});
  CHECK(six.adjacent == 3);
  CHECK(six.equal == 0);
  CHECK(six.monotone == 3);
  CHECK(catenary_adj_element(m, {3}) == 0);
  CHECK(catenary_equal_element(m, {6}) == 0);
  CHECK(catenary_mon_element(m, {6}) == 3);
}

TEST_CASE("catenary family agrees with the definitions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    Monoid m{NumericalMonoid(testing_helpers::random_generators(rng, 14, 4))};
    for (Int a = 0; a <= 70; ++a) {
      if (!m.contains({a})) continue;
      auto zs = oracle::factorizations(m, {a});
      auto family = catenary_family_element(m, {a});
      auto [equal, adjacent] = equal_and_adjacent(zs);
      CAPTURE(m.to_string());
      CAPTURE(a);
      CHECK(family.catenary == oracle::catenary_element(zs));
      CHECK(family.equal == equal);
      CHECK(family.adjacent == adjacent);
      CHECK(family.monotone == std::max(equal, adjacent));
      Int longest = 0;
      for (const auto& z : zs) longest = std::max(longest, oracle::length(z));
      CHECK(family.catenary <= family.monotone);
      CHECK(family.monotone <= longest);
    }
  }
}

TEST_CASE("catenary via Betti elements equals the per-element scan") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    NumericalMonoid s(testing_helpers::random_generators(rng, 16, 4));
    Monoid m(s);
    const Int bound = s.frobenius_number() + s.multiplicity() * s.largest_generator();
    Int scan = 0;
    for (Int a = 0; a <= bound; ++a) {
      if (m.contains({a})) scan = std::max(scan, catenary_element(m, {a}));
    }
    CAPTURE(m.to_string());
    CHECK(catenary(m) == scan);
  }
}

TEST_CASE("tame pairs") {
  Monoid m{NumericalMonoid({2, 3})};
  CHECK(tame_pair(m, {6}, 0) == 3);
  CHECK(tame_pair(m, {2}, 0) == 0);  // every factorization contains the atom
  CHECK(tame_pair(m, {3}, 0) == 0);  // 3 is not divisible by 2
}

TEST_CASE("tame degree") {
  CHECK(tame_degree(Monoid(NumericalMonoid({19, 46, 391}))).value == 39);
  CHECK(tame_degree(Monoid(NumericalMonoid({6, 7, 15}))).value == 7);
  CHECK(tame_degree(Monoid(NumericalMonoid({2, 3}))).value == 3);
  CHECK(tame_degree(Monoid(NumericalMonoid({5, 6, 9}))).value == 5);
  CHECK(tame_degree(Monoid(AffineMonoid(2, {}, {}))).value == 0);
}

TEST_CASE("tame degree equals the definition on small monoids") {
  std::vector<Monoid> monoids{Monoid(NumericalMonoid({2, 3})), Monoid(NumericalMonoid({3, 5, 7})),
                              Monoid(NumericalMonoid({5, 6, 9})), Monoid(NumericalMonoid({4, 6, 9})),
                              parity3(), ZeroSumMonoid(FiniteAbelianGroup::parse("C4")).monoid()};
  for (const auto& m : monoids) {
    auto t = tame_degree(m);
    CAPTURE(m.to_string());
    CHECK(t.value == oracle::tame_degree_scan(m, omega(m) + 1));
    CHECK(t.value == *std::max_element(t.per_atom.begin(), t.per_atom.end()));
    CHECK(tame_pair(m, t.witness_element, t.witness_atom) == t.value);
  }
}

TEST_CASE("elasticity and distances of numerical monoids") {
  CHECK(elasticity(NumericalMonoid({4, 10, 21})) == Rational(21, 4));
  CHECK(elasticity(NumericalMonoid({2, 3})) == Rational(3, 2));
  CHECK(elasticity(NumericalMonoid({1}, true)) == Rational(1));
  CHECK(min_delta(NumericalMonoid({4, 10, 21})) == 1);
  CHECK(min_delta(NumericalMonoid({2, 3})) == 1);
  CHECK(min_delta(NumericalMonoid({5, 8, 11})) == 3);
  CHECK_THROWS_AS(min_delta(NumericalMonoid({1}, true)), DomainError);
  CHECK(delta_observed(NumericalMonoid({2, 3}), 50) == Vec{1});
  CHECK(delta_observed(NumericalMonoid({5, 8, 11}), 300) == Vec{3});
}

TEST_CASE("observed distances agree with brute-force length sets") {
  for (const Vec& gens : {Vec{4, 10, 21}, Vec{5, 6, 9}, Vec{6, 9, 20}}) {
    NumericalMonoid s(gens);
    Monoid m(s);
    std::set<Int> deltas;
    for (Int a = 0; a <= 150; ++a) {
      if (!s.contains(a)) continue;
      std::set<Int> lengths;
      for (const auto& z : oracle::factorizations(m, {a})) lengths.insert(oracle::length(z));
      for (auto it = lengths.begin(); std::next(it) != lengths.end() && it != lengths.end(); ++it) {
        deltas.insert(*std::next(it) - *it);
      }
    }
    CHECK(delta_observed(s, 150) == Vec(deltas.begin(), deltas.end()));
  }
}

TEST_CASE("the inequality chain holds on the small corpus") {
  for (const auto& gens : numerical_monoids_up_to_frobenius(9)) {
    NumericalMonoid s(gens);
    Monoid m(s);
    const Int w = omega(m);
    const Int c = catenary(m);
    const Int t = tame_degree(m).value;
    auto deltas = delta_observed(s, s.frobenius_number() + s.multiplicity() * s.largest_generator());
    CAPTURE(m.to_string());
    if (!deltas.empty()) CHECK(2 + deltas.back() <= c);
    CHECK(c <= w);
    CHECK(w <= t);
    CHECK(t <= w * w);
    CHECK(elasticity(s) <= Rational(w));
    CHECK(t <= a_invariant(m));
  }
}
