#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "factorinv/factorization.hpp"
#include "factorinv/integer.hpp"

namespace factorinv {

class Monoid;

struct EquationRow {
  std::vector<Int> coeffs;
  Int rhs = 0;
};

struct CongruenceRow {
  std::vector<Int> coeffs;
  Int modulus = 1;
  Int rhs = 0;
};

/// Linear equations and congruences over N0^n.
class DiophantineSystem {
 public:
  explicit DiophantineSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  void add_equation(std::vector<Int> coeffs, Int rhs = 0);
  void add_congruence(std::vector<Int> coeffs, Int modulus, Int rhs = 0);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<EquationRow>& equations() const { return equations_; }
  const std::vector<CongruenceRow>& congruences() const { return congruences_; }
  bool is_homogeneous() const;

  /// True iff x (of length num_vars, any sign) satisfies every row.
  bool satisfied_by(std::span<const Int> x) const;

 private:
  std::size_t num_vars_;
  std::vector<EquationRow> equations_;
  std::vector<CongruenceRow> congruences_;
};

enum class Relation { equals, at_least };

struct SearchLimits {
  /// Upper bound on candidate vectors expanded by the completion search.
  std::size_t max_nodes = 50'000'000;
};

/// Componentwise-minimal nonzero solutions of a homogeneous system, sorted
/// lexicographically.
std::vector<std::vector<Int>> hilbert_basis(const DiophantineSystem& system,
                                            const SearchLimits& limits = {});

/// Componentwise-minimal solutions of an inhomogeneous system, sorted
/// lexicographically. With `at_least`, equation rows read A x >= rhs;
/// congruence rows keep their meaning. Infeasible systems give an empty list.
std::vector<std::vector<Int>> minimal_inhomogeneous(const DiophantineSystem& system,
                                                    Relation relation,
                                                    const SearchLimits& limits = {});

/// Atoms of the monoid of relations {(x,y) : pi(x) = pi(y)}, including the
/// diagonal atoms (e_i, e_i). Sorted by (left, right).
std::vector<RelationPair> kernel_atoms(const Monoid& monoid, const SearchLimits& limits = {});

/// Atoms of the equal-length relations {(x,y) : pi(x) = pi(y), |x| = |y|}.
std::vector<RelationPair> equal_kernel_atoms(const Monoid& monoid,
                                             const SearchLimits& limits = {});

}  // namespace factorinv
