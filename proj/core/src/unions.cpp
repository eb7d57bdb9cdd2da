#include "factorinv/unions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "factorinv/diophantine.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/length_sets.hpp"

namespace factorinv {

namespace {

UnionOfLengths finish(Int k, std::vector<Int> values) {
  UnionOfLengths u;
  u.k = k;
  u.values = std::move(values);
  if (!u.values.empty()) {
    u.lambda = u.values.front();
    u.rho = u.values.back();
  }
  return u;
}

struct VectorHash {
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int e : v) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<Int> shortest_solution(std::vector<Int> coeffs, Int rhs) {
  DiophantineSystem system(coeffs.size());
  system.add_equation(std::move(coeffs), rhs);
  auto sols = minimal_inhomogeneous(system, Relation::equals);
  if (sols.empty()) return {};
  auto total = [](const std::vector<Int>& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
  return *std::min_element(sols.begin(), sols.end(), [&](const auto& a, const auto& b) {
    Int ta = total(a);
    Int tb = total(b);
    return ta != tb ? ta < tb : a < b;
  });
}

}  // namespace

std::vector<UnionOfLengths> unions_up_to(const NumericalMonoid& monoid, Int k_max) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  const Int bound = checked_mul(k_max, monoid.largest_generator());
  LengthTable table(monoid, bound);
  const std::size_t width = table.bits(0).size();
  std::vector<boost::dynamic_bitset<>> acc(static_cast<std::size_t>(k_max + 1),
                                           boost::dynamic_bitset<>(width));
  for (Int a = 0; a <= bound; ++a) {
    const auto& bits = table.bits(a);
    for (auto l = bits.find_first(); l != boost::dynamic_bitset<>::npos && l <= static_cast<std::size_t>(k_max);
         l = bits.find_next(l)) {
      acc[l] |= bits;
    }
  }
  std::vector<UnionOfLengths> out;
  for (Int k = 1; k <= k_max; ++k) {
    std::vector<Int> values;
    const auto& bits = acc[static_cast<std::size_t>(k)];
    for (auto l = bits.find_first(); l != boost::dynamic_bitset<>::npos; l = bits.find_next(l)) {
      values.push_back(static_cast<Int>(l));
    }
    out.push_back(finish(k, std::move(values)));
  }
  return out;
}

UnionOfLengths union_of_lengths(const NumericalMonoid& monoid, Int k) {
  return unions_up_to(monoid, k).back();
}

std::vector<UnionOfLengths> unions_up_to(const Monoid& monoid, Int k_max) {
  if (monoid.is_numerical()) return unions_up_to(monoid.numerical(), k_max);
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  LengthOracle oracle(monoid);
  std::vector<UnionOfLengths> out;
  std::unordered_set<Element, VectorHash> level{monoid.zero()};
  for (Int k = 1; k <= k_max; ++k) {
    std::unordered_set<Element, VectorHash> next;
    for (const auto& a : level) {
      for (const auto& u : monoid.atoms()) next.insert(monoid.add(a, u));
    }
    std::set<Int> values;
    for (const auto& a : next) {
      for (Int l : oracle.lengths(a)) values.insert(l);
    }
    out.push_back(finish(k, {values.begin(), values.end()}));
    level = std::move(next);
  }
  return out;
}

RatioMonoids ratio_monoids(const NumericalMonoid& monoid, Int lo, Int hi) {
  if (lo < 1 || hi < lo) throw DomainError("window must satisfy 1 <= lo <= hi");
  const Int n1 = monoid.multiplicity();
  const Int nt = monoid.largest_generator();
  RatioMonoids r;
  r.lo = lo;
  r.hi = hi;
  const Int l = std::lcm(n1, nt);
  r.m_step = l / nt;
  r.m_prime_step = l / n1;
  auto unions = unions_up_to(monoid, hi);
  std::vector<Int> expected_m;
  std::vector<Int> expected_m_prime;
  for (Int k = lo; k <= hi; ++k) {
    const auto& u = unions[static_cast<std::size_t>(k - 1)];
    // rho_k / k = n_t / n_1 and k / lambda_k = n_t / n_1, cross-multiplied.
    if (rational_equal(u.rho, k, nt, n1)) r.m.push_back(k);
    if (rational_equal(k, u.lambda, nt, n1)) r.m_prime.push_back(k);
    if (k % r.m_step == 0) expected_m.push_back(k);
    if (k % r.m_prime_step == 0) expected_m_prime.push_back(k);
  }
  r.m_matches = r.m == expected_m;
  r.m_prime_matches = r.m_prime == expected_m_prime;
  return r;
}

std::optional<ApHypothesis> check_ap_hypothesis(const NumericalMonoid& monoid) {
  const auto& n = monoid.generators();
  const std::size_t t = n.size();
  if (t < 2) throw DomainError("progression hypothesis needs at least two generators");
  ApHypothesis h;
  h.d = min_delta(monoid);
  std::vector<Int> alpha_coeffs;
  for (std::size_t i = 1; i < t; ++i) alpha_coeffs.push_back(n[i] - n[0]);
  std::vector<Int> beta_coeffs;
  for (std::size_t i = 0; i + 1 < t; ++i) beta_coeffs.push_back(n[t - 1] - n[i]);
  h.alpha = shortest_solution(alpha_coeffs, checked_mul(h.d, n[0]));
  if (h.alpha.empty()) return std::nullopt;
  h.beta = shortest_solution(beta_coeffs, checked_mul(h.d, n[t - 1]));
  if (h.beta.empty()) return std::nullopt;
  return h;
}

ApScanReport ap_structure_scan(const NumericalMonoid& monoid, Int k_max) {
  if (k_max < 2) throw DomainError("k_max must be at least 2");
  ApScanReport report;
  report.d = min_delta(monoid);
  report.k_max = k_max;
  const Int n1 = monoid.multiplicity();
  const Int nt = monoid.largest_generator();
  report.density_limit = (Rational(nt, n1) - Rational(n1, nt)) / report.d;
  report.hypothesis_holds = check_ap_hypothesis(monoid).has_value();
  for (auto& u : unions_up_to(monoid, k_max)) {
    ApScanRow row;
    row.k = u.k;
    row.rho = u.rho;
    row.lambda = u.lambda;
    std::set<Int> present(u.values.begin(), u.values.end());
    for (Int v = u.lambda; v <= u.rho; v += report.d) {
      if (!present.contains(v)) row.missing.push_back(v);
    }
    row.is_ap = row.missing.empty() &&
                std::all_of(u.values.begin(), u.values.end(),
                            [&](Int v) { return (v - u.lambda) % report.d == 0; });
    row.values = std::move(u.values);
    report.rows.push_back(std::move(row));
  }
  std::optional<Int> estimate;
  for (auto it = report.rows.rbegin(); it != report.rows.rend() && it->is_ap; ++it) estimate = it->k;
  report.k_star_estimate = estimate;
  return report;
}

nlohmann::json to_json(const ApScanReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"k", row.k},
                    {"values", row.values},
                    {"rho", row.rho},
                    {"lambda", row.lambda},
                    {"is_ap", row.is_ap},
                    {"missing", row.missing},
                    {"density", to_string(Rational(static_cast<Int>(row.values.size()), row.k))}});
  }
  nlohmann::json doc;
  doc["d"] = report.d;
  doc["k_max"] = report.k_max;
  doc["rows"] = rows;
  doc["k_star_estimate"] =
      report.k_star_estimate ? nlohmann::json(*report.k_star_estimate) : nlohmann::json(nullptr);
  doc["k_star_is_empirical"] = true;
  doc["density_limit"] = to_string(report.density_limit);
  doc["hypothesis_holds"] = report.hypothesis_holds;
  return doc;
}

}  // namespace factorinv
