#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factorinv/integer.hpp"

namespace factorinv {

/// A submonoid of (N0,+) with finite complement, stored by its minimal
/// generators n_1 < ... < n_t.
class NumericalMonoid {
 public:
  /// Validates that `generators` is a strictly increasing minimal generating
  /// set with gcd 1 and n_1 >= 2. `allow_trivial` admits the monoid N0 = <1>.
  explicit NumericalMonoid(std::vector<Int> generators, bool allow_trivial = false);

  /// Builds the monoid generated by an arbitrary list, keeping only the
  /// minimal generators.
  static NumericalMonoid generated_by(std::vector<Int> values);

  /// Parses "4,10,21" (whitespace tolerated).
  static NumericalMonoid parse(std::string_view literal);

  const std::vector<Int>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  Int multiplicity() const { return generators_.front(); }
  Int largest_generator() const { return generators_.back(); }

  bool contains(Int a) const;
  Int frobenius_number() const;

  /// Ap(S,m) sorted ascending. Requires m in S, m > 0.
  std::vector<Int> apery_set(Int m) const;
  /// Ap(S,m) indexed by residue: entry r is the least member congruent to r.
  const std::vector<Int>& apery_by_residue(Int m) const;

  /// True iff r is a sum of generators with index >= first.
  bool suffix_contains(std::size_t first, Int r) const;

  std::string to_string() const;

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.generators_ == b.generators_;
  }

 private:
  struct Cache;
  std::vector<Int> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Least element of the monoid generated by `gens` in each residue class
/// modulo m (Dijkstra over residues). Unreachable classes hold -1.
std::vector<Int> residue_minima(std::span<const Int> gens, Int m);

}  // namespace factorinv
