#pragma once

#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "factorinv/monoid.hpp"
#include "factorinv/numerical_monoid.hpp"

namespace factorinv {

/// L(a) for every a in [0, bound] of a numerical monoid, by the recursion
/// L(a) = union over i of (L(a - n_i) + 1).
class LengthTable {
 public:
  LengthTable(const NumericalMonoid& monoid, Int bound);

  Int bound() const { return bound_; }
  /// Bit l is set iff l is in L(a). Empty for non-members.
  const boost::dynamic_bitset<>& bits(Int a) const;
  std::vector<Int> lengths(Int a) const;
  bool has_length(Int a, Int l) const;

 private:
  Int bound_;
  std::vector<boost::dynamic_bitset<>> table_;
};

/// Memoized L(a) for elements of an arbitrary monoid.
class LengthOracle {
 public:
  explicit LengthOracle(const Monoid& monoid) : monoid_(monoid) {}
  /// L(a) ascending; empty when a is not a member.
  const std::vector<Int>& lengths(const Element& a);

 private:
  const Monoid& monoid_;
  std::map<Element, std::vector<Int>> memo_;
};

}  // namespace factorinv
