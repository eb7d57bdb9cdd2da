#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorinv/diophantine.hpp"
#include "factorinv/monoid.hpp"
#include "factorinv/presentations.hpp"

namespace factorinv {

struct ReportOptions {
  /// Numerical monoids: scan every a <= bound (default F + n_1 n_t).
  /// Affine monoids: scan every sum of at most `bound` atoms (default omega).
  std::optional<Int> bound;
  /// Budget for the relation-atom searches behind the certified bounds.
  SearchLimits limits{5'000'000};
};

/// A global catenary-type degree that has no exact algorithm: the largest
/// per-element value over the scan window, with the element attaining it, and
/// an upper bound when one is certified.
struct ScannedDegree {
  Int scan_value = 0;
  Element witness;
  std::optional<Int> certified_upper_bound;
  /// Where the upper bound comes from, or why it is absent.
  std::string bound_source;
};

struct InvariantReport {
  std::string monoid;
  Int scan_bound = 0;
  std::string scan_kind;  // "element" or "atom_count"
  std::size_t scanned_elements = 0;

  std::vector<Int> omega_per_atom;
  Int omega = 0;
  Int catenary = 0;
  ScannedDegree catenary_mon;
  ScannedDegree catenary_equal;
  ScannedDegree catenary_adj;
  std::vector<Int> tame_per_atom;
  Int tame = 0;
  /// Exact when known; absent for affine monoids whose relation atoms exceed
  /// the budget.
  std::optional<Rational> elasticity;
  std::vector<Int> delta_observed;
  std::optional<Int> a_invariant;

  bool generic = false;
  Presentation presentation;
  bool omega_lt_tame = false;
  std::optional<Int> min_delta;
  /// Every distance satisfies d <= c(S) - 2.
  Int delta_upper_bound = 0;
  /// Largest per-element catenary degree in the scan; equals c(S) once the
  /// window covers every Betti element.
  Int catenary_scan_value = 0;

  bool chain_delta_catenary = true;  // 2 + max delta_observed <= c
  bool chain_catenary_omega = false;
  bool chain_omega_tame = false;
  bool chain_tame_omega_squared = false;
  bool chain_elasticity_omega = false;
  std::optional<bool> chain_tame_a;
  bool chain_generic_equality = true;  // generic implies c = omega = t
  bool chain_holds = false;
};

/// Computes every invariant of the monoid and cross-checks the inequality
/// chain 2 + max delta <= c <= omega <= t <= omega^2, rho <= omega, t <= a.
InvariantReport full_report(const Monoid& monoid, const ReportOptions& options = {});

nlohmann::json to_json(const ScannedDegree& degree);
nlohmann::json to_json(const InvariantReport& report);

}  // namespace factorinv
