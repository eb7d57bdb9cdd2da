#pragma once

#include <array>
#include <span>
#include <vector>

#include "factorinv/factorization.hpp"
#include "factorinv/monoid.hpp"

namespace factorinv {

/// omega(S,s) = max |x| over Min(Z(s+S)); 0 for s = 0.
Int omega_element(const Monoid& monoid, const Element& s);
/// omega(S,u) for each atom u, in atom order.
std::vector<Int> omega_per_atom(const Monoid& monoid);
Int omega(const Monoid& monoid);

/// Smallest N for which the N-distance graph on zs is connected (maximum
/// edge of a minimax spanning tree); 0 when |zs| <= 1.
Int bottleneck(std::span<const Factorization> zs);

Int catenary_element(const Monoid& monoid, const Element& a);
/// c(S) = max over Betti elements b of mu(b); 0 when factorial.
Int catenary(const Monoid& monoid);

struct ThreeGeneratorTable {
  std::array<Int, 3> c{};
  /// r[i][j] for i != j with c_i n_i = r_ij n_j + r_ik n_k; diagonal unused.
  std::array<std::array<Int, 3>, 3> r{};
  Int value = 0;
};

/// Closed form for c(S) with three pairwise coprime generators.
ThreeGeneratorTable catenary_three_coprime_formula(const NumericalMonoid& monoid);

Int catenary_adj_element(const Monoid& monoid, const Element& a);
Int catenary_equal_element(const Monoid& monoid, const Element& a);
Int catenary_mon_element(const Monoid& monoid, const Element& a);

struct CatenaryFamily {
  Int catenary = 0;
  Int adjacent = 0;
  Int equal = 0;
  Int monotone = 0;
};

/// All four per-element catenary values from a single enumeration of Z(a).
CatenaryFamily catenary_family_element(const Monoid& monoid, const Element& a);

/// t(a,u): max over z in Z(a) of d(z, Z(a) cap u Z(S)); 0 when a is not
/// divisible by u.
Int tame_pair(const Monoid& monoid, const Element& a, std::size_t atom);
Int tame_pair(std::span<const Factorization> zs, std::size_t atom);

struct TameResult {
  Int value = 0;
  /// Max of t(a,u) over a in pi(Min(Z(u+S))), per atom u.
  std::vector<Int> per_atom;
  Element witness_element;
  std::size_t witness_atom = 0;
};

TameResult tame_degree(const Monoid& monoid);

/// n_t / n_1.
Rational elasticity(const NumericalMonoid& monoid);
/// gcd of consecutive generator gaps.
Int min_delta(const NumericalMonoid& monoid);
/// Union of Delta(L(a)) for a <= bound, ascending.
std::vector<Int> delta_observed(const NumericalMonoid& monoid, Int bound);

}  // namespace factorinv
