#include <doctest.h>

#include <random>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "factorinv/block_monoid.hpp"
#include "factorinv/corpus.hpp"
#include "factorinv/factorizations.hpp"

using namespace factorinv;
using testing_helpers::sorted;
using testing_helpers::vectors;
using testing_helpers::Vec;

namespace {

Monoid parity3() { return Monoid(AffineMonoid(3, {{{1, 0, 1}, 2, 0}, {{0, 1, 1}, 2, 0}}, {})); }

const std::vector<Vec> kParityAtoms{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}};

}  // namespace

TEST_CASE("factorization sets") {
  Monoid m{NumericalMonoid({2, 3})};
  CHECK(vectors(factorizations(m, {6})) == std::vector<Vec>{{0, 2}, {3, 0}});
  CHECK(vectors(factorizations(m, {0})) == std::vector<Vec>{{0, 0}});
  CHECK_THROWS_AS(factorizations(m, {1}), DomainError);
  CHECK(vectors(factorizations(parity3(), {0, 0, 0})) == std::vector<Vec>{{0, 0, 0, 0}});
  CHECK_THROWS_AS(factorizations(parity3(), {1, 0, 0}), DomainError);
}

TEST_CASE("factorization sets come out in lexicographic order") {
  Monoid m{NumericalMonoid({4, 10, 21})};
  auto zs = factorizations(m, {420});
  CHECK(std::is_sorted(zs.begin(), zs.end()));
}

TEST_CASE("factorization sets agree with brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Monoid m{NumericalMonoid(testing_helpers::random_generators(rng, 20, 4))};
    for (Int a = 0; a <= 80; ++a) {
      if (!m.contains({a})) continue;
      CHECK(vectors(factorizations(m, {a})) == oracle::factorizations(m, {a}));
    }
  }
  Monoid p = parity3();
  for (const auto& a : oracle::elements_up_to_length(p, 4)) {
    CHECK(vectors(factorizations(p, a)) == oracle::factorizations(p, a));
  }
}

TEST_CASE("factorization enumeration honors its budget") {
  Monoid m{NumericalMonoid({2, 3})};
  EnumerationLimits small;
  small.max_factorizations = 5;
  CHECK_THROWS_AS(factorizations(m, {60}, small), ResourceError);
}

TEST_CASE("longest factorizations of 21k in <4,10,21>") {
  // As many 4s as possible; the rest of 21k is covered by 21, 10 or 10 + 21.
  Monoid m{NumericalMonoid({4, 10, 21})};
  for (Int k = 1; k <= 16; ++k) {
    auto zs = factorizations(m, {21 * k});
    Int longest = 0;
    for (const auto& z : zs) longest = std::max(longest, z.length());
    std::vector<Vec> at_max;
    for (const auto& z : zs) {
      if (z.length() == longest) at_max.push_back(z.vector());
    }
    REQUIRE(at_max.size() == 1);
    const Int t = k / 4;
    Vec expected;
    switch (k % 4) {
      case 0: expected = {21 * t, 0, 0}; break;
      case 1: expected = {21 * t, 0, 1}; break;
      case 2: expected = {21 * t + 8, 1, 0}; break;
      default: expected = {21 * t + 8, 1, 1}; break;
    }
    CAPTURE(k);
    CHECK(at_max.front() == expected);
  }
}

TEST_CASE("length profiles") {
  Monoid m{NumericalMonoid({2, 3})};
  auto p = length_profile(m, {6});
  CHECK(p.lengths == Vec{2, 3});
  CHECK(p.delta == Vec{1});
  CHECK(p.elasticity == Rational(3, 2));
  auto atom = length_profile(m, {3});
  CHECK(atom.lengths == Vec{1});
  CHECK(atom.delta.empty());
  CHECK(atom.elasticity == Rational(1));
  CHECK(length_profile(m, {0}).elasticity == Rational(1));
  Monoid big{NumericalMonoid({4, 10, 21})};
  auto q = length_profile(big, {84});
  CHECK(q.min == 4);
  CHECK(q.max == 21);
  CHECK(q.elasticity == Rational(21, 4));
  CHECK(make_length_profile({2, 6, 7}).is_arithmetic_progression(1) == false);
  CHECK(make_length_profile({3, 5, 7}).is_arithmetic_progression(2));
  CHECK(make_length_profile({4}).is_arithmetic_progression(3));
}

TEST_CASE("R-classes") {
  Monoid m{NumericalMonoid({2, 3})};
  auto single = r_classes(m, {3});
  CHECK(single.size() == 1);
  auto six = r_classes(m, {6});
  REQUIRE(six.size() == 2);
  CHECK(vectors(six.classes[0]) == std::vector<Vec>{{0, 2}});
  CHECK(vectors(six.classes[1]) == std::vector<Vec>{{3, 0}});
  CHECK(six.mu() == 3);

  ZeroSumMonoid c3(FiniteAbelianGroup::parse("C3"));
  const Monoid& b = c3.monoid();
  // V^3 = U1 U2 over g, 2g is the multiplicity vector (3, 3).
  auto classes = r_classes(b, {3, 3});
  REQUIRE(classes.size() == 2);
  CHECK(classes.classes[0].size() == 1);
  CHECK(classes.classes[1].size() == 1);
}

TEST_CASE("R-classes partition Z(a) and agree with a flood fill") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    Monoid m{NumericalMonoid(testing_helpers::random_generators(rng, 15, 4))};
    for (Int a = 0; a <= 60; ++a) {
      if (!m.contains({a})) continue;
      auto zs = factorizations(m, {a});
      auto part = r_classes(m, {a});
      std::size_t total = 0;
      for (std::size_t c = 0; c < part.size(); ++c) {
        total += part.classes[c].size();
        Int shortest = part.classes[c].front().length();
        for (const auto& z : part.classes[c]) shortest = std::min(shortest, z.length());
        CHECK(part.min_lengths[c] == shortest);
        // Members of different classes never share an atom.
        for (std::size_t d = c + 1; d < part.size(); ++d) {
          for (const auto& x : part.classes[c]) {
            for (const auto& y : part.classes[d]) CHECK_FALSE(x.shares_atom_with(y));
          }
        }
      }
      CHECK(total == zs.size());
      CHECK(part.size() == oracle::r_class_count(vectors(zs)));
    }
  }
}

TEST_CASE("Betti elements") {
  CHECK(betti_elements(Monoid(NumericalMonoid({2, 3}))) == std::vector<Element>{{6}});
  CHECK(betti_elements(Monoid(AffineMonoid(2, {}, {}))).empty());
  CHECK(betti_elements(Monoid(NumericalMonoid({5, 7, 9}))) == std::vector<Element>{{14}, {25}, {27}});
}

TEST_CASE("Betti elements by scanning for several R-classes") {
  for (const Vec& gens : {Vec{5, 7, 9}, Vec{4, 10, 21}, Vec{6, 7, 15}, Vec{5, 6, 9}, Vec{7, 9, 11, 13}}) {
    Monoid m{NumericalMonoid(gens)};
    std::vector<Element> scanned;
    const Int bound = 2 * gens.back() * gens.front();
    for (Int a = 1; a <= bound; ++a) {
      if (!m.contains({a})) continue;
      if (oracle::r_class_count(oracle::factorizations(m, {a})) >= 2) scanned.push_back({a});
    }
    CAPTURE(m.to_string());
    CHECK(betti_elements(m) == scanned);
    CHECK(betti_elements_from_kernel(m) == scanned);
  }
}

TEST_CASE("Betti elements from the kernel agree on the corpus and on affine monoids") {
  for (const auto& gens : numerical_monoids_up_to_frobenius(9)) {
    // The kernel path enumerates all factorizations of large elements.
    if (gens.size() > 6) continue;
    Monoid m{NumericalMonoid(gens)};
    CHECK(betti_elements(m) == betti_elements_from_kernel(m));
  }
  for (const char* g : {"C3", "C4", "C2xC2"}) {
    ZeroSumMonoid z(FiniteAbelianGroup::parse(g));
    CHECK(betti_elements(z.monoid()) == betti_elements_from_kernel(z.monoid()));
  }
  CHECK(betti_elements(parity3()) == betti_elements_from_kernel(parity3()));
}

TEST_CASE("Betti elements of pairwise coprime triples lie among the c_i n_i") {
  for (const Vec& gens : {Vec{5, 7, 9}, Vec{7, 11, 13}, Vec{4, 9, 11}, Vec{8, 9, 37}}) {
    NumericalMonoid s(gens);
    Monoid m(s);
    std::vector<Int> products;
    for (std::size_t i = 0; i < 3; ++i) {
      Vec others;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) others.push_back(gens[j]);
      }
      auto in = oracle::sieve(others, gens[i] * gens.back());
      Int c = 1;
      while (!in[static_cast<std::size_t>(c * gens[i])]) ++c;
      products.push_back(c * gens[i]);
    }
    for (const auto& b : betti_elements(m)) {
      CHECK(std::find(products.begin(), products.end(), b[0]) != products.end());
    }
  }
}

TEST_CASE("minimal factorizations of shifted ideals: affine") {
  Monoid m = parity3();
  auto got = vectors(min_z_shifted(m, {1, 1, 1}));
  std::vector<Vec> expected{testing_helpers::relabel(m, kParityAtoms, {0, 0, 0, 1}),
                            testing_helpers::relabel(m, kParityAtoms, {1, 1, 1, 0})};
  CHECK(got == sorted(expected));
  CHECK(vectors(min_z_shifted_diophantine(m, {1, 1, 1})) == got);
  CHECK(vectors(min_z_shifted(m, {0, 0, 0})) == std::vector<Vec>{{0, 0, 0, 0}});
  // Outside the group generated by the monoid the set is empty.
  CHECK(min_z_shifted(m, {1, 0, 0}).empty());
  CHECK(min_z_shifted_diophantine(m, {1, 0, 0}).empty());
}

TEST_CASE("affine minimal factorizations: both paths and the definition agree") {
  std::vector<Monoid> monoids{parity3(), Monoid(AffineMonoid(3, {{{1, 2, 0}, 3, 0}}, {{1, 1, -1}})),
                              ZeroSumMonoid(FiniteAbelianGroup::parse("C4")).monoid()};
  for (const auto& m : monoids) {
    for (const auto& s : oracle::elements_up_to_length(m, 2)) {
      auto fast = vectors(min_z_shifted(m, s));
      CHECK(vectors(min_z_shifted_diophantine(m, s)) == fast);
      for (const auto& z : fast) {
        auto img = oracle::image(m, z);
        Element d(img.size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = img[k] - s[k];
        CHECK(m.contains(d));
        for (std::size_t i = 0; i < z.size(); ++i) {
          if (z[i] == 0) continue;
          Element e = d;
          for (std::size_t k = 0; k < e.size(); ++k) e[k] -= m.atom(i)[k];
          CHECK_FALSE(m.contains(e));
        }
      }
    }
  }
}

TEST_CASE("numerical minimal factorizations: shifted by n_1 in S_k") {
  // S_k = <p1 k, q, p2 k> with q = 7, p1 = 2, p2 = 5, k = 3.
  Monoid m{NumericalMonoid({6, 7, 15})};
  CHECK(vectors(min_z_shifted(m, {6})) == std::vector<Vec>{{0, 0, 2}, {0, 3, 0}, {1, 0, 0}});
  CHECK(vectors(min_z_shifted(m, {0})) == std::vector<Vec>{{0, 0, 0}});
}

TEST_CASE("numerical minimal factorizations match brute force") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = testing_helpers::random_generators(rng, 30, 4);
    Monoid m{NumericalMonoid(gens)};
    std::uniform_int_distribution<Int> shift(0, 100);
    for (int j = 0; j < 3; ++j) {
      const Int s = shift(rng);
      CAPTURE(m.to_string());
      CAPTURE(s);
      CHECK(vectors(min_z_shifted(m, {s})) == oracle::min_z_shifted_numerical(gens, s));
    }
  }
}
