#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "factorinv/factorization.hpp"
#include "factorinv/monoid.hpp"

namespace testing_helpers {

using factorinv::Factorization;
using factorinv::Int;
using Vec = std::vector<Int>;

inline std::vector<Vec> vectors(const std::vector<Factorization>& zs) {
  std::vector<Vec> out;
  for (const auto& z : zs) out.push_back(z.vector());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vec> sorted(std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

/// Position of `atom` in the monoid's atom list.
inline std::size_t atom_index(const factorinv::Monoid& m, const Vec& atom) {
  const auto& atoms = m.atoms();
  return static_cast<std::size_t>(std::find(atoms.begin(), atoms.end(), atom) - atoms.begin());
}

/// Re-expresses an exponent vector written over `order` (a list of atoms) in
/// the monoid's own atom order.
inline Vec relabel(const factorinv::Monoid& m, const std::vector<Vec>& order, const Vec& z) {
  Vec out(m.rank(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) out[atom_index(m, order[i])] = z[i];
  return out;
}

/// Random numerical monoid with largest generator <= max_gen, via minimal
/// generators of a random generating set with gcd 1.
inline Vec random_generators(std::mt19937_64& rng, Int max_gen, std::size_t max_count) {
  std::uniform_int_distribution<Int> pick(2, max_gen);
  std::uniform_int_distribution<std::size_t> count(2, max_count);
  while (true) {
    Vec raw;
    const auto n = count(rng);
    for (std::size_t i = 0; i < n; ++i) raw.push_back(pick(rng));
    Int g = 0;
    for (Int v : raw) g = std::gcd(g, v);
    if (g != 1) continue;
    return factorinv::NumericalMonoid::generated_by(raw).generators();
  }
}

}  // namespace testing_helpers
