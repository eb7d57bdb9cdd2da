#include "factorinv/length_sets.hpp"

#include <algorithm>
#include <set>

namespace factorinv {

LengthTable::LengthTable(const NumericalMonoid& monoid, Int bound) : bound_(bound) {
  if (bound < 0) throw DomainError("length table bound must be non-negative");
  const auto& gens = monoid.generators();
  // A factorization of a has at most a / n_1 atoms.
  const auto width = static_cast<std::size_t>(bound / monoid.multiplicity() + 2);
  table_.assign(static_cast<std::size_t>(bound + 1), boost::dynamic_bitset<>(width));
  table_[0].set(0);
  for (Int a = 1; a <= bound; ++a) {
    auto& row = table_[static_cast<std::size_t>(a)];
    for (Int g : gens) {
      if (g > a) break;
      const auto& prev = table_[static_cast<std::size_t>(a - g)];
      if (prev.any()) row |= prev << 1;
    }
  }
}

const boost::dynamic_bitset<>& LengthTable::bits(Int a) const {
  if (a < 0 || a > bound_) {
    throw DomainError("element " + std::to_string(a) + " outside length table bound " +
                      std::to_string(bound_));
  }
  return table_[static_cast<std::size_t>(a)];
}

std::vector<Int> LengthTable::lengths(Int a) const {
  const auto& b = bits(a);
  std::vector<Int> out;
  for (auto i = b.find_first(); i != boost::dynamic_bitset<>::npos; i = b.find_next(i)) {
    out.push_back(static_cast<Int>(i));
  }
  return out;
}

bool LengthTable::has_length(Int a, Int l) const {
  const auto& b = bits(a);
  return l >= 0 && static_cast<std::size_t>(l) < b.size() && b.test(static_cast<std::size_t>(l));
}

const std::vector<Int>& LengthOracle::lengths(const Element& a) {
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  std::vector<Int> result;
  if (std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; })) {
    result = {0};
  } else if (monoid_.contains(a)) {
    std::set<Int> acc;
    for (const auto& u : monoid_.atoms()) {
      Element rest = monoid_.subtract(a, u);
      if (!monoid_.contains(rest)) continue;
      for (Int l : lengths(rest)) acc.insert(l + 1);
    }
    result.assign(acc.begin(), acc.end());
  }
  return memo_.emplace(a, std::move(result)).first->second;
}

}  // namespace factorinv
