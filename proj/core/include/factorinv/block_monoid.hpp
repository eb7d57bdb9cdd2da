#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorinv/diophantine.hpp"
#include "factorinv/monoid.hpp"

namespace factorinv {

using GroupElement = std::vector<Int>;

/// C_{d_1} x ... x C_{d_r} with d_1 | d_2 | ... | d_r, each d_i >= 2.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);

  /// Parses "C3", "C2xC2", "C2xC2xC2", "C2xC4" (factors are sorted first).
  static FiniteAbelianGroup parse(std::string_view literal);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  Int order() const;
  std::size_t rank() const { return factors_.size(); }
  /// All elements in mixed-radix order, starting with zero.
  std::vector<GroupElement> elements() const;
  /// G with zero removed.
  std::vector<GroupElement> nonzero_elements() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;

  std::string to_string() const;

 private:
  std::vector<Int> factors_;
};

/// B(G_0) bridged to the affine monoid of multiplicity vectors over G_0.
class ZeroSumMonoid {
 public:
  static constexpr Int kDefaultMaxOrder = 8;

  /// g0 empty means G with zero removed. Groups above max_order raise
  /// ResourceError.
  ZeroSumMonoid(FiniteAbelianGroup group, std::vector<GroupElement> g0 = {},
                Int max_order = kDefaultMaxOrder);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& g0() const { return g0_; }
  const Monoid& monoid() const { return monoid_; }

  /// Atoms as multiplicity vectors over g0, in the monoid's atom order.
  const std::vector<Element>& atoms() const { return monoid_.atoms(); }
  Int davenport() const;
  /// Direct check: the weighted sum of g0 is zero.
  bool is_zero_sum(const Element& multiplicities) const;
  bool is_symmetric() const;

  std::string sequence_to_string(const Element& multiplicities) const;

 private:
  FiniteAbelianGroup group_;
  std::vector<GroupElement> g0_;
  Monoid monoid_;
};

struct GroupSuiteReport {
  std::string group;
  Int order = 0;
  std::size_t atom_count = 0;
  Int davenport = 0;
  bool generic = false;
  Int catenary = 0;
  Int omega = 0;
  Int tame = 0;
  bool generic_expected = false;
  bool catenary_equals_tame_expected = false;
  bool consistent = false;
};

GroupSuiteReport group_suite(const FiniteAbelianGroup& group,
                                    Int max_order = ZeroSumMonoid::kDefaultMaxOrder);

struct RhoCheckReport {
  Int davenport = 0;
  Int k_max = 0;
  std::vector<Int> rho;  // rho_1 .. rho_{k_max}
  /// rho_{2k} = k D for every even 2k <= k_max.
  bool even_rho_ok = false;
  /// max rho_k / k over the window, which should be D/2.
  Rational rho_window_max{0};
  bool elasticity_ok = false;
  /// f(k) = rho_{2k+1} - k D for 2k+1 <= k_max; non-decreasing and at most
  /// floor(D/2), so its maximum is certified once floor(D/2) is reached.
  std::vector<Int> odd_excess;
  /// Minimal m >= 0 maximizing f, when certified within the window.
  std::optional<Int> m_natural0;
  /// Minimal m >= 1 maximizing f over m >= 1, when certified.
  std::optional<Int> m_positive;
  /// Minimal maximizers of f inside the window when no certificate exists.
  /// These are provisional: a later k may still raise f.
  Int window_m_natural0 = 0;
  std::optional<Int> window_m_positive;
  /// a(B(G_0)), absent when the relation atoms exceed the search budget.
  std::optional<Int> a_invariant;
  std::optional<bool> bound_holds_natural0;
  std::optional<bool> bound_holds_positive;
  std::optional<bool> window_bound_holds_natural0;
  std::optional<bool> window_bound_holds_positive;
};

/// `limits` bounds the relation-atom search behind a(S); past it the
/// a-invariant and the bound checks are left absent.
RhoCheckReport rho_checks(const ZeroSumMonoid& monoid, Int k_max,
                          const SearchLimits& limits = SearchLimits{200'000});

nlohmann::json to_json(const GroupSuiteReport& report);
nlohmann::json to_json(const RhoCheckReport& report);

}  // namespace factorinv
