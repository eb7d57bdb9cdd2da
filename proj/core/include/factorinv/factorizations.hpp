#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "factorinv/factorization.hpp"
#include "factorinv/monoid.hpp"

namespace factorinv {

struct EnumerationLimits {
  /// Enumerations producing more factorizations raise ResourceError.
  std::size_t max_factorizations = 2'000'000;
};

/// Z(a) in lexicographically ascending order. Throws DomainError if a is
/// not a member.
std::vector<Factorization> factorizations(const Monoid& monoid, const Element& a,
                                          const EnumerationLimits& limits = {});

/// Visits the factorizations of a numerical element that use only atoms with
/// index >= first, in lexicographic order. Exponents below `first` are zero.
void for_each_factorization(const NumericalMonoid& monoid, Int a, std::size_t first,
                            const std::function<void(const std::vector<Int>&)>& visit,
                            const EnumerationLimits& limits = {});

struct LengthProfile {
  std::vector<Int> lengths;  // ascending
  std::vector<Int> delta;    // ascending, distinct gaps
  Int min = 0;
  Int max = 0;
  Rational elasticity{1};

  /// True iff lengths form an arithmetic progression with difference d
  /// (singletons count as progressions).
  bool is_arithmetic_progression(Int d) const;
};

LengthProfile make_length_profile(std::vector<Int> lengths);
LengthProfile length_profile(const Monoid& monoid, const Element& a);

struct RClassPartition {
  /// Classes ordered by their lexicographically smallest member; members
  /// ascending.
  std::vector<std::vector<Factorization>> classes;
  /// |sigma| = min length within each class.
  std::vector<Int> min_lengths;

  std::size_t size() const { return classes.size(); }
  /// mu(a) = max |sigma|; 0 for an empty partition.
  Int mu() const;
};

RClassPartition r_classes(std::span<const Factorization> zs);
RClassPartition r_classes(const Monoid& monoid, const Element& a);

/// Elements with at least two R-classes, ascending. Numerical monoids scan
/// w + n_i for w in Ap(S,n_1), i >= 2; affine monoids scan images of
/// factorizations of length at most omega(S).
std::vector<Element> betti_elements(const Monoid& monoid);

/// Same set, with candidates taken from the images of kernel atoms.
std::vector<Element> betti_elements_from_kernel(const Monoid& monoid);

/// Min(Z(s+S)) ascending. Numerical monoids use the Apery reduction; affine
/// monoids use a direct minimal-cover search on A x >= s.
std::vector<Factorization> min_z_shifted(const Monoid& monoid, const Element& s);

/// Affine Min(Z(s+S)) through the homogenized Diophantine solver.
std::vector<Factorization> min_z_shifted_diophantine(const Monoid& monoid, const Element& s);

}  // namespace factorinv
