#include "factorinv/invariants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "factorinv/factorizations.hpp"
#include "factorinv/length_sets.hpp"

namespace factorinv {

Int omega_element(const Monoid& monoid, const Element& s) {
  Int best = 0;
  for (const auto& z : min_z_shifted(monoid, s)) best = std::max(best, z.length());
  return best;
}

std::vector<Int> omega_per_atom(const Monoid& monoid) {
  std::vector<Int> out;
  for (const auto& u : monoid.atoms()) out.push_back(omega_element(monoid, u));
  return out;
}

Int omega(const Monoid& monoid) {
  auto per = omega_per_atom(monoid);
  return per.empty() ? 0 : *std::max_element(per.begin(), per.end());
}

Int bottleneck(std::span<const Factorization> zs) {
  const std::size_t n = zs.size();
  if (n <= 1) return 0;
  // Prim's algorithm; the largest edge of a minimum spanning tree is the
  // connectivity threshold.
  std::vector<Int> best(n, std::numeric_limits<Int>::max());
  std::vector<bool> in_tree(n, false);
  best[0] = 0;
  Int threshold = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (pick == n || best[v] < best[pick])) pick = v;
    }
    in_tree[pick] = true;
    threshold = std::max(threshold, best[pick]);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v]) best[v] = std::min(best[v], distance(zs[pick], zs[v]));
    }
  }
  return threshold;
}

Int catenary_element(const Monoid& monoid, const Element& a) {
  auto zs = factorizations(monoid, a);
  return bottleneck(zs);
}

Int catenary(const Monoid& monoid) {
  Int best = 0;
  for (const auto& b : betti_elements(monoid)) best = std::max(best, r_classes(monoid, b).mu());
  return best;
}

ThreeGeneratorTable catenary_three_coprime_formula(const NumericalMonoid& monoid) {
  const auto& n = monoid.generators();
  if (n.size() != 3) throw DomainError("closed form needs exactly three generators");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::gcd(n[i], n[j]) != 1) {
        throw DomainError("generators " + std::to_string(n[i]) + " and " + std::to_string(n[j]) +
                          " are not coprime");
      }
    }
  }
  ThreeGeneratorTable table;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    for (Int c = 1;; ++c) {
      const Int target = c * n[i];
      std::vector<std::pair<Int, Int>> reps;
      for (Int rj = 0; rj * n[j] <= target; ++rj) {
        Int rest = target - rj * n[j];
        if (rest % n[k] == 0) reps.emplace_back(rj, rest / n[k]);
      }
      if (reps.empty()) continue;
      if (reps.size() != 1) throw DomainError("representation of c_i n_i is not unique");
      table.c[i] = c;
      table.r[i][j] = reps.front().first;
      table.r[i][k] = reps.front().second;
      break;
    }
  }
  table.value = std::max({table.c[0], table.c[1], table.c[2], table.r[0][1] + table.r[0][2],
                          table.r[1][0] + table.r[1][2], table.r[2][0] + table.r[2][1]});
  return table;
}

CatenaryFamily catenary_family_element(const Monoid& monoid, const Element& a) {
  auto zs = factorizations(monoid, a);
  CatenaryFamily f;
  f.catenary = bottleneck(zs);
  std::map<Int, std::vector<Factorization>> by_length;
  for (auto& z : zs) by_length[z.length()].push_back(z);
  const std::vector<Factorization>* previous = nullptr;
  for (const auto& [len, group] : by_length) {
    f.equal = std::max(f.equal, bottleneck(group));
    if (previous) f.adjacent = std::max(f.adjacent, set_distance(*previous, group));
    previous = &group;
  }
  f.monotone = std::max(f.equal, f.adjacent);
  return f;
}

Int catenary_adj_element(const Monoid& monoid, const Element& a) {
  return catenary_family_element(monoid, a).adjacent;
}

Int catenary_equal_element(const Monoid& monoid, const Element& a) {
  return catenary_family_element(monoid, a).equal;
}

Int catenary_mon_element(const Monoid& monoid, const Element& a) {
  return catenary_family_element(monoid, a).monotone;
}

Int tame_pair(std::span<const Factorization> zs, std::size_t atom) {
  std::vector<const Factorization*> divisible;
  for (const auto& z : zs) {
    if (z[atom] > 0) divisible.push_back(&z);
  }
  if (divisible.empty()) return 0;
  Int worst = 0;
  for (const auto& z : zs) {
    if (z[atom] > 0) continue;
    Int nearest = std::numeric_limits<Int>::max();
    for (const auto* w : divisible) {
      nearest = std::min(nearest, distance(z, *w));
      if (nearest <= worst) break;
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

Int tame_pair(const Monoid& monoid, const Element& a, std::size_t atom) {
  if (atom >= monoid.rank()) throw DomainError("atom index out of range");
  auto zs = factorizations(monoid, a);
  return tame_pair(zs, atom);
}

TameResult tame_degree(const Monoid& monoid) {
  TameResult result;
  std::map<Element, std::vector<Factorization>> cache;
  for (std::size_t u = 0; u < monoid.rank(); ++u) {
    std::set<Element> elements;
    for (const auto& z : min_z_shifted(monoid, monoid.atom(u))) elements.insert(monoid.image(z));
    Int atom_best = 0;
    for (const auto& a : elements) {
      auto it = cache.find(a);
      if (it == cache.end()) it = cache.emplace(a, factorizations(monoid, a)).first;
      Int value = tame_pair(it->second, u);
      if (value > atom_best) atom_best = value;
      if (value > result.value) {
        result.value = value;
        result.witness_element = a;
        result.witness_atom = u;
      }
    }
    result.per_atom.push_back(atom_best);
  }
  return result;
}

Rational elasticity(const NumericalMonoid& monoid) {
  return Rational(monoid.largest_generator(), monoid.multiplicity());
}

Int min_delta(const NumericalMonoid& monoid) {
  const auto& n = monoid.generators();
  if (n.size() < 2) throw DomainError("min delta needs at least two generators");
  Int g = 0;
  for (std::size_t i = 1; i < n.size(); ++i) g = std::gcd(g, n[i] - n[i - 1]);
  return g;
}

std::vector<Int> delta_observed(const NumericalMonoid& monoid, Int bound) {
  LengthTable table(monoid, bound);
  std::set<Int> gaps;
  for (Int a = 0; a <= bound; ++a) {
    const auto& bits = table.bits(a);
    auto prev = bits.find_first();
    if (prev == boost::dynamic_bitset<>::npos) continue;
    for (auto i = bits.find_next(prev); i != boost::dynamic_bitset<>::npos;
         prev = i, i = bits.find_next(i)) {
      gaps.insert(static_cast<Int>(i - prev));
    }
  }
  return {gaps.begin(), gaps.end()};
}

}  // namespace factorinv
