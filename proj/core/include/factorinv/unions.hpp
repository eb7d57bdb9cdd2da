#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorinv/monoid.hpp"
#include "factorinv/numerical_monoid.hpp"

namespace factorinv {

/// V_k: the union of all sets of lengths containing k.
struct UnionOfLengths {
  Int k = 0;
  std::vector<Int> values;  // ascending
  Int rho = 0;              // max V_k
  Int lambda = 0;           // min V_k
};

UnionOfLengths union_of_lengths(const NumericalMonoid& monoid, Int k);
/// V_1, ..., V_{k_max} sharing one length table.
std::vector<UnionOfLengths> unions_up_to(const NumericalMonoid& monoid, Int k_max);
/// V_1, ..., V_{k_max} for any monoid, by enumerating products of k atoms.
std::vector<UnionOfLengths> unions_up_to(const Monoid& monoid, Int k_max);

struct RatioMonoids {
  Int lo = 1;
  Int hi = 1;
  /// {k : rho_k = k rho(S)} within [lo, hi].
  std::vector<Int> m;
  /// {k : lambda_k rho(S) = k} within [lo, hi].
  std::vector<Int> m_prime;
  Int m_step = 0;        // lcm(n_1, n_t) / n_t
  Int m_prime_step = 0;  // lcm(n_1, n_t) / n_1
  bool m_matches = false;
  bool m_prime_matches = false;
};

RatioMonoids ratio_monoids(const NumericalMonoid& monoid, Int lo, Int hi);

struct ApHypothesis {
  Int d = 0;
  /// (n_2-n_1) x_2 + ... + (n_t-n_1) x_t = d n_1, solution over x_2..x_t.
  std::vector<Int> alpha;
  /// (n_t-n_1) y_1 + ... + (n_t-n_{t-1}) y_{t-1} = d n_t, over y_1..y_{t-1}.
  std::vector<Int> beta;
};

/// Solutions of the two progression equations, or nothing when either is
/// infeasible.
std::optional<ApHypothesis> check_ap_hypothesis(const NumericalMonoid& monoid);

struct ApScanRow {
  Int k = 0;
  std::vector<Int> values;
  Int rho = 0;
  Int lambda = 0;
  bool is_ap = false;
  /// lambda + i d in [lambda, rho] that are absent from V_k.
  std::vector<Int> missing;
};

struct ApScanReport {
  Int d = 0;
  Int k_max = 0;
  std::vector<ApScanRow> rows;
  /// Smallest k such that every scanned V_j with j >= k is a progression with
  /// difference d; empirical only, absent when V_{k_max} is not one.
  std::optional<Int> k_star_estimate;
  /// (1/d)(n_t/n_1 - n_1/n_t).
  Rational density_limit{0};
  bool hypothesis_holds = false;
};

ApScanReport ap_structure_scan(const NumericalMonoid& monoid, Int k_max);

nlohmann::json to_json(const ApScanReport& report);

}  // namespace factorinv
