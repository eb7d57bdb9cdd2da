#include "factorinv/report.hpp"

#include <algorithm>
#include <set>

#include "factorinv/factorizations.hpp"
#include "factorinv/invariants.hpp"

namespace factorinv {

namespace {

std::vector<Element> affine_window(const Monoid& monoid, Int max_atoms) {
  std::set<Element> seen{monoid.zero()};
  std::vector<Element> level{monoid.zero()};
  for (Int k = 1; k <= max_atoms; ++k) {
    std::set<Element> next;
    for (const auto& a : level) {
      for (const auto& u : monoid.atoms()) {
        auto b = monoid.add(a, u);
        if (!seen.contains(b)) next.insert(std::move(b));
      }
    }
    seen.insert(next.begin(), next.end());
    level.assign(next.begin(), next.end());
  }
  return {seen.begin(), seen.end()};
}

void record(ScannedDegree& degree, Int value, const Element& a) {
  if (degree.witness.empty() || value > degree.scan_value) {
    degree.scan_value = value;
    degree.witness = a;
  }
}

}  // namespace

InvariantReport full_report(const Monoid& monoid, const ReportOptions& options) {
  InvariantReport r;
  r.monoid = monoid.to_string();

  r.omega_per_atom = omega_per_atom(monoid);
  r.omega = r.omega_per_atom.empty()
                ? 0
                : *std::max_element(r.omega_per_atom.begin(), r.omega_per_atom.end());
  r.catenary = catenary(monoid);
  auto tame = tame_degree(monoid);
  r.tame_per_atom = tame.per_atom;
  r.tame = tame.value;
  r.presentation = minimal_presentation(monoid);
  r.generic = r.presentation.is_generic;
  r.omega_lt_tame = r.omega < r.tame;

  std::vector<Element> window;
  if (monoid.is_numerical()) {
    const auto& s = monoid.numerical();
    r.scan_kind = "element";
    r.scan_bound = options.bound.value_or(
        checked_add(s.frobenius_number(), checked_mul(s.multiplicity(), s.largest_generator())));
    for (Int a = 0; a <= r.scan_bound; ++a) {
      if (s.contains(a)) window.push_back({a});
    }
    r.delta_observed = delta_observed(s, r.scan_bound);
    if (s.rank() >= 2) r.min_delta = min_delta(s);
    r.elasticity = elasticity(s);
    try {
      r.a_invariant = a_invariant(monoid, options.limits);
    } catch (const ResourceError&) {
    }
  } else {
    r.scan_kind = "atom_count";
    r.scan_bound = options.bound.value_or(r.omega);
    window = affine_window(monoid, r.scan_bound);
    std::set<Int> deltas;
    for (const auto& a : window) {
      for (Int d : length_profile(monoid, a).delta) deltas.insert(d);
    }
    r.delta_observed.assign(deltas.begin(), deltas.end());
    try {
      Int a_value = 0;
      Rational rho(1);
      for (const auto& pair : kernel_atoms(monoid, options.limits)) {
        const Int x = pair.left.length();
        const Int y = pair.right.length();
        a_value = std::max({a_value, x, y});
        if (x > 0 && y > 0) rho = std::max({rho, Rational(x, y), Rational(y, x)});
      }
      r.a_invariant = a_value;
      r.elasticity = rho;
    } catch (const ResourceError&) {
    }
  }
  r.scanned_elements = window.size();

  for (const auto& a : window) {
    auto family = catenary_family_element(monoid, a);
    r.catenary_scan_value = std::max(r.catenary_scan_value, family.catenary);
    record(r.catenary_mon, family.monotone, a);
    record(r.catenary_equal, family.equal, a);
    record(r.catenary_adj, family.adjacent, a);
  }
  try {
    r.catenary_equal.certified_upper_bound = equal_catenary_bound(monoid, options.limits);
    r.catenary_equal.bound_source = "max |x| over atoms of the equal-length relations";
  } catch (const ResourceError&) {
    r.catenary_equal.bound_source = "equal-length relation atoms exceeded the search budget";
  }
  r.catenary_adj.bound_source = "no certified bound; the scan value is a lower bound";
  r.catenary_mon.bound_source = "no certified bound; the scan value is a lower bound";

  r.delta_upper_bound = std::max<Int>(0, r.catenary - 2);
  if (!r.delta_observed.empty()) {
    r.chain_delta_catenary = 2 + r.delta_observed.back() <= r.catenary;
  }
  r.chain_catenary_omega = r.catenary <= r.omega;
  r.chain_omega_tame = r.omega <= r.tame;
  r.chain_tame_omega_squared = r.tame <= checked_mul(r.omega, r.omega);
  r.chain_elasticity_omega = !r.elasticity || *r.elasticity <= Rational(r.omega);
  if (r.a_invariant) r.chain_tame_a = r.tame <= *r.a_invariant;
  if (r.generic) r.chain_generic_equality = r.catenary == r.omega && r.omega == r.tame;
  r.chain_holds = r.chain_delta_catenary && r.chain_catenary_omega && r.chain_omega_tame &&
                  r.chain_tame_omega_squared && r.chain_elasticity_omega &&
                  r.chain_tame_a.value_or(true) && r.chain_generic_equality;
  return r;
}

nlohmann::json to_json(const ScannedDegree& degree) {
  nlohmann::json doc;
  doc["scan_value"] = degree.scan_value;
  doc["witness"] = degree.witness;
  doc["certified_upper_bound"] = degree.certified_upper_bound
                                     ? nlohmann::json(*degree.certified_upper_bound)
                                     : nlohmann::json(nullptr);
  doc["bound_source"] = degree.bound_source;
  return doc;
}

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json doc;
  doc["monoid"] = r.monoid;
  doc["omega_per_atom"] = r.omega_per_atom;
  doc["omega"] = r.omega;
  doc["catenary"] = r.catenary;
  doc["catenary_mon"] = to_json(r.catenary_mon);
  doc["catenary_equal"] = to_json(r.catenary_equal);
  doc["catenary_adj"] = to_json(r.catenary_adj);
  doc["tame_per_atom"] = r.tame_per_atom;
  doc["tame"] = r.tame;
  doc["elasticity"] = r.elasticity ? nlohmann::json(to_string(*r.elasticity)) : nlohmann::json(nullptr);
  doc["delta_observed"] = r.delta_observed;
  doc["a_invariant"] = r.a_invariant ? nlohmann::json(*r.a_invariant) : nlohmann::json(nullptr);
  doc["generic"] = r.generic;
  doc["omega_lt_tame"] = r.omega_lt_tame;
  doc["min_delta"] = r.min_delta ? nlohmann::json(*r.min_delta) : nlohmann::json(nullptr);
  doc["delta_upper_bound"] = r.delta_upper_bound;
  doc["catenary_scan_value"] = r.catenary_scan_value;
  doc["scan"] = {{"kind", r.scan_kind}, {"bound", r.scan_bound}, {"elements", r.scanned_elements}};
  doc["presentation"] = to_json(r.presentation);
  doc["chain"] = {{"delta_catenary", r.chain_delta_catenary},
                  {"catenary_omega", r.chain_catenary_omega},
                  {"omega_tame", r.chain_omega_tame},
                  {"tame_omega_squared", r.chain_tame_omega_squared},
                  {"elasticity_omega", r.chain_elasticity_omega},
                  {"tame_a", r.chain_tame_a ? nlohmann::json(*r.chain_tame_a) : nlohmann::json(nullptr)},
                  {"generic_equality", r.chain_generic_equality},
                  {"holds", r.chain_holds}};
  return doc;
}

}  // namespace factorinv
