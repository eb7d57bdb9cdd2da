#include <doctest.h>

#include <sstream>

#include "../support/oracles.hpp"
#include "factorinv/corpus.hpp"

using namespace factorinv;
using Vec = std::vector<Int>;

TEST_CASE("smallest corpus") {
  CHECK(numerical_monoids_up_to_frobenius(1) == std::vector<Vec>{{2, 3}});
  CHECK(numerical_monoids_up_to_frobenius(2) == std::vector<Vec>{{2, 3}, {3, 4, 5}});
}

TEST_CASE("corpus agrees with the gap-set enumeration") {
  auto tree = numerical_monoids_up_to_frobenius(12);
  auto sorted_tree = tree;
  std::sort(sorted_tree.begin(), sorted_tree.end());
  CHECK(std::adjacent_find(sorted_tree.begin(), sorted_tree.end()) == sorted_tree.end());
  CHECK(sorted_tree == oracle::numerical_monoids_by_gaps(12));
  for (const auto& gens : tree) CHECK(oracle::frobenius(gens) <= 12);
}

TEST_CASE("corpus counts") {
  CHECK(numerical_monoids_up_to_frobenius(15).size() == 579);
  CHECK(numerical_monoids_up_to_frobenius(20).size() == 3515);
}

TEST_CASE("corpus records and CSV") {
  auto records = search_frobenius(5, 1);
  REQUIRE(records.front().generators == Vec{2, 3});
  CHECK(records.front().frobenius == 1);
  CHECK(records.front().omega == 3);
  CHECK(records.front().tame == 3);
  CHECK(records.front().catenary == 3);
  CHECK(records.front().generic);
  std::ostringstream out;
  write_csv(out, {records.front()});
  CHECK(out.str() == "generators;frobenius;omega;catenary;tame;generic;omega_lt_tame\n"
                     "2 3;1;3;3;3;true;false\n");
}

TEST_CASE("corpus search is deterministic across worker counts") {
  auto one = search_frobenius(10, 1);
  auto three = search_frobenius(10, 3);
  std::ostringstream a;
  std::ostringstream b;
  write_csv(a, one);
  write_csv(b, three);
  CHECK(a.str() == b.str());
}

TEST_CASE("summary lists the monoids with omega below tame") {
  auto s = summarize(search_frobenius(13, 1), 13);
  CHECK(s.f_max == 13);
  CHECK(s.count == numerical_monoids_up_to_frobenius(13).size());
  CHECK(std::find(s.omega_lt_tame.begin(), s.omega_lt_tame.end(), Vec{5, 6, 9}) !=
        s.omega_lt_tame.end());
  std::size_t total = 0;
  for (const auto& [f, n] : s.count_by_frobenius) total += n;
  CHECK(total == s.count);
}

TEST_CASE("parallel_for rethrows the first failure") {
  CHECK_THROWS_AS(parallel_for(10, 2,
                               [](std::size_t i) {
                                 if (i == 4) throw DomainError("boom");
                               }),
                  DomainError);
}
