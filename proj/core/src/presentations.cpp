#include "factorinv/presentations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "factorinv/factorizations.hpp"
#include "factorinv/length_sets.hpp"

namespace factorinv {

Presentation minimal_presentation(const Monoid& monoid) {
  Presentation p;
  p.betti_elements = betti_elements(monoid);
  p.is_unique_minimal = true;
  for (const auto& b : p.betti_elements) {
    auto classes = r_classes(monoid, b);
    // classes are ordered by smallest member, so class 0 holds the root.
    const Factorization& root = classes.classes.front().front();
    for (std::size_t c = 1; c < classes.size(); ++c) {
      p.pairs.push_back({classes.classes[c].front(), root});
    }
    bool two_singletons = classes.size() == 2 && classes.classes[0].size() == 1 &&
                          classes.classes[1].size() == 1;
    if (!two_singletons) p.is_unique_minimal = false;
  }
  p.is_generic = p.is_unique_minimal;
  for (const auto& pair : p.pairs) {
    for (std::size_t i = 0; i < monoid.rank(); ++i) {
      if (pair.left[i] == 0 && pair.right[i] == 0) p.is_generic = false;
    }
  }
  return p;
}

std::optional<Presentation> has_generic_presentation(const Monoid& monoid) {
  Presentation p = minimal_presentation(monoid);
  if (!p.is_generic) return std::nullopt;
  return p;
}

Int a_invariant(const Monoid& monoid, const SearchLimits& limits) {
  if (monoid.is_numerical()) {
    // For a minimal solution of sum n_i x_i = sum n_j y_j the x-length is at
    // most max n_j (distinct partial sums in a greedy ordering), so a(S) <= n_t.
    // Two-atom relations (n_j/g e_i, n_i/g e_j) with g = gcd(n_i, n_j) are
    // atoms, which often attain that bound.
    const auto& gens = monoid.numerical().generators();
    Int lower = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i != j) lower = std::max(lower, gens[j] / std::gcd(gens[i], gens[j]));
      }
    }
    if (lower == gens.back()) return lower;
  }
  Int best = 0;
  for (const auto& pair : kernel_atoms(monoid, limits)) best = std::max(best, pair.left.length());
  return best;
}

Int equal_catenary_bound(const Monoid& monoid, const SearchLimits& limits) {
  Int best = 0;
  for (const auto& pair : equal_kernel_atoms(monoid, limits)) {
    best = std::max(best, pair.left.length());
  }
  return best;
}

MinADResult min_a_d_search(const Monoid& monoid, Int d, Int length_cap) {
  if (d < 1) throw DomainError("d must be positive");
  if (length_cap < 1) throw DomainError("length cap must be at least 1");
  MinADResult result;
  result.d = d;
  result.length_cap = length_cap;
  const std::size_t t = monoid.rank();

  std::function<bool(const Factorization&)> in_a_d;
  std::unique_ptr<LengthTable> table;
  std::unique_ptr<LengthOracle> oracle;
  if (monoid.is_numerical()) {
    const auto& s = monoid.numerical();
    table = std::make_unique<LengthTable>(s, checked_mul(length_cap, s.largest_generator()));
    in_a_d = [&](const Factorization& x) {
      return table->has_length(monoid.image(x)[0], d + x.length());
    };
  } else {
    oracle = std::make_unique<LengthOracle>(monoid);
    in_a_d = [&](const Factorization& x) {
      const auto& ls = oracle->lengths(monoid.image(x));
      return std::binary_search(ls.begin(), ls.end(), d + x.length());
    };
  }

  constexpr std::size_t kMaxCandidates = 20'000'000;
  std::size_t visited = 0;
  std::vector<Int> current(t, 0);
  for (Int level = 1; level <= length_cap; ++level) {
    std::vector<Factorization> found;
    std::function<void(std::size_t, Int)> walk = [&](std::size_t i, Int remaining) {
      if (i + 1 == t) {
        current[i] = remaining;
        if (++visited > kMaxCandidates) {
          throw ResourceError("min_a_d_search exceeded its candidate budget");
        }
        Factorization x(current);
        bool dominated = std::any_of(result.elements.begin(), result.elements.end(),
                                     [&](const Factorization& m) { return m.divides(x); });
        if (!dominated && in_a_d(x)) found.push_back(std::move(x));
        current[i] = 0;
        return;
      }
      for (Int v = remaining; v >= 0; --v) {
        current[i] = v;
        walk(i + 1, remaining - v);
      }
      current[i] = 0;
    };
    walk(0, level);
    if (!found.empty()) result.last_level_found = level;
    result.elements.insert(result.elements.end(), found.begin(), found.end());
  }
  std::sort(result.elements.begin(), result.elements.end());
  result.window = a_invariant(monoid);
  result.stopping_rule_met = length_cap - result.last_level_found >= result.window;
  return result;
}

nlohmann::json to_json(const RelationPair& pair) {
  return nlohmann::json::array({pair.left.vector(), pair.right.vector()});
}

nlohmann::json to_json(const Presentation& presentation) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pair : presentation.pairs) pairs.push_back(to_json(pair));
  nlohmann::json doc;
  doc["pairs"] = pairs;
  doc["betti_elements"] = presentation.betti_elements;
  doc["is_minimal"] = presentation.is_minimal;
  doc["is_unique_minimal"] = presentation.is_unique_minimal;
  doc["is_generic"] = presentation.is_generic;
  return doc;
}

}  // namespace factorinv
