#include "factorinv/block_monoid.hpp"

#include <algorithm>
#include <charconv>

#include "factorinv/invariants.hpp"
#include "factorinv/presentations.hpp"
#include "factorinv/unions.hpp"

namespace factorinv {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  if (factors_.empty()) throw DomainError("group needs at least one cyclic factor");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw DomainError("cyclic factors must have order at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw DomainError("invariant factors must form a divisibility chain");
    }
  }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view literal) {
  std::vector<Int> factors;
  std::size_t pos = 0;
  while (pos < literal.size()) {
    std::size_t sep = literal.find_first_of("xX*", pos);
    if (sep == std::string_view::npos) sep = literal.size();
    std::string_view token = literal.substr(pos, sep - pos);
    if (token.size() < 2 || (token[0] != 'C' && token[0] != 'c')) {
      throw ParseError("invalid cyclic factor '" + std::string(token) + "' in '" +
                       std::string(literal) + "'");
    }
    Int order = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), order);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("invalid cyclic factor '" + std::string(token) + "'");
    }
    factors.push_back(order);
    pos = sep + 1;
    if (sep + 1 == literal.size()) throw ParseError("trailing separator in group literal");
  }
  if (factors.empty()) throw ParseError("empty group literal");
  std::sort(factors.begin(), factors.end());
  try {
    return FiniteAbelianGroup(std::move(factors));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid group '") + std::string(literal) + "': " + e.what());
  }
}

Int FiniteAbelianGroup::order() const {
  Int n = 1;
  for (Int d : factors_) n = checked_mul(n, d);
  return n;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  GroupElement g(factors_.size(), 0);
  while (true) {
    out.push_back(g);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++g[i] < factors_[i]) break;
      g[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<GroupElement> FiniteAbelianGroup::nonzero_elements() const {
  auto all = elements();
  all.erase(all.begin());
  return all;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(a[i] + b[i], factors_[i]);
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(-a[i], factors_[i]);
  return out;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
  return std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; });
}

std::string FiniteAbelianGroup::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += "C" + std::to_string(factors_[i]);
  }
  return s;
}

namespace {

AffineMonoid bridge(const FiniteAbelianGroup& group, const std::vector<GroupElement>& g0) {
  std::vector<CongruenceRow> rows;
  for (std::size_t j = 0; j < group.rank(); ++j) {
    CongruenceRow row;
    row.modulus = group.invariant_factors()[j];
    for (const auto& g : g0) row.coeffs.push_back(g[j]);
    rows.push_back(std::move(row));
  }
  return AffineMonoid(g0.size(), std::move(rows), {});
}

std::vector<GroupElement> resolve_g0(const FiniteAbelianGroup& group, std::vector<GroupElement> g0,
                                     Int max_order) {
  if (group.order() > max_order) {
    throw ResourceError("group order " + std::to_string(group.order()) +
                        " exceeds the supported maximum " + std::to_string(max_order));
  }
  if (g0.empty()) return group.nonzero_elements();
  for (auto& g : g0) {
    if (g.size() != group.rank()) throw DomainError("group element has wrong rank");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = mod_floor(g[i], group.invariant_factors()[i]);
  }
  auto sorted = g0;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("G_0 elements must be distinct");
  }
  return g0;
}

}  // namespace

ZeroSumMonoid::ZeroSumMonoid(FiniteAbelianGroup group, std::vector<GroupElement> g0,
                             Int max_order)
    : group_(std::move(group)),
      g0_(resolve_g0(group_, std::move(g0), max_order)),
      monoid_(bridge(group_, g0_)) {}

Int ZeroSumMonoid::davenport() const {
  Int best = 0;
  for (const auto& u : atoms()) {
    Int len = 0;
    for (Int v : u) len += v;
    best = std::max(best, len);
  }
  return best;
}

bool ZeroSumMonoid::is_zero_sum(const Element& multiplicities) const {
  if (multiplicities.size() != g0_.size()) throw DomainError("sequence has wrong length");
  GroupElement sum(group_.rank(), 0);
  for (std::size_t i = 0; i < g0_.size(); ++i) {
    if (multiplicities[i] < 0) return false;
    for (Int c = 0; c < multiplicities[i]; ++c) sum = group_.add(sum, g0_[i]);
  }
  return group_.is_zero(sum);
}

bool ZeroSumMonoid::is_symmetric() const {
  auto sorted = g0_;
  std::sort(sorted.begin(), sorted.end());
  return std::all_of(g0_.begin(), g0_.end(), [&](const GroupElement& g) {
    return std::binary_search(sorted.begin(), sorted.end(), group_.negate(g));
  });
}

std::string ZeroSumMonoid::sequence_to_string(const Element& multiplicities) const {
  std::string s;
  for (std::size_t i = 0; i < g0_.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "(";
    for (std::size_t j = 0; j < g0_[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(g0_[i][j]);
    }
    s += ")";
    if (multiplicities[i] > 1) s += "^" + std::to_string(multiplicities[i]);
  }
  return s.empty() ? "1" : s;
}

GroupSuiteReport group_suite(const FiniteAbelianGroup& group, Int max_order) {
  if (group.order() < 3) throw DomainError("the suite needs |G| >= 3");
  ZeroSumMonoid z(group, {}, max_order);
  const Monoid& m = z.monoid();
  GroupSuiteReport r;
  r.group = group.to_string();
  r.order = group.order();
  r.atom_count = z.atoms().size();
  r.davenport = z.davenport();
  r.generic = minimal_presentation(m).is_generic;
  r.catenary = catenary(m);
  r.omega = omega(m);
  r.tame = tame_degree(m).value;
  const auto& f = group.invariant_factors();
  const bool c3 = f == std::vector<Int>{3};
  const bool c4 = f == std::vector<Int>{4};
  const bool c22 = f == std::vector<Int>{2, 2};
  const bool c222 = f == std::vector<Int>{2, 2, 2};
  r.generic_expected = c3 || c22;
  r.catenary_equals_tame_expected = c3 || c4 || c22 || c222;
  r.consistent = r.generic == r.generic_expected &&
                 (r.catenary == r.tame) == r.catenary_equals_tame_expected;
  return r;
}

RhoCheckReport rho_checks(const ZeroSumMonoid& z, Int k_max, const SearchLimits& limits) {
  if (!z.is_symmetric()) throw DomainError("rho checks need G_0 = -G_0");
  if (k_max < 2) throw DomainError("k_max must be at least 2");
  RhoCheckReport r;
  r.davenport = z.davenport();
  r.k_max = k_max;
  const Int d = r.davenport;
  for (const auto& u : unions_up_to(z.monoid(), k_max)) r.rho.push_back(u.rho);
  auto rho = [&](Int k) { return r.rho[static_cast<std::size_t>(k - 1)]; };

  r.even_rho_ok = true;
  for (Int k = 2; k <= k_max; k += 2) {
    if (rho(k) != (k / 2) * d) r.even_rho_ok = false;
  }
  r.elasticity_ok = true;
  for (Int k = 1; k <= k_max; ++k) {
    Rational q(rho(k), k);
    r.rho_window_max = std::max(r.rho_window_max, q);
  }
  r.elasticity_ok = r.rho_window_max == Rational(d, 2);

  const Int cap = d / 2;
  for (Int k = 0; 2 * k + 1 <= k_max; ++k) r.odd_excess.push_back(rho(2 * k + 1) - k * d);
  for (std::size_t k = 0; k < r.odd_excess.size(); ++k) {
    if (r.odd_excess[k] != cap) continue;
    if (!r.m_natural0) r.m_natural0 = static_cast<Int>(k);
    if (k >= 1 && !r.m_positive) r.m_positive = static_cast<Int>(k);
  }
  const auto best = std::max_element(r.odd_excess.begin(), r.odd_excess.end());
  r.window_m_natural0 = static_cast<Int>(best - r.odd_excess.begin());
  if (r.odd_excess.size() > 1) {
    const auto best_pos = std::max_element(r.odd_excess.begin() + 1, r.odd_excess.end());
    r.window_m_positive = static_cast<Int>(best_pos - r.odd_excess.begin());
  }
  try {
    r.a_invariant = a_invariant(z.monoid(), limits);
  } catch (const ResourceError&) {
    r.a_invariant = std::nullopt;
  }
  if (r.a_invariant) {
    if (r.m_natural0) r.bound_holds_natural0 = rho(2 * *r.m_natural0 + 1) <= *r.a_invariant;
    if (r.m_positive) r.bound_holds_positive = rho(2 * *r.m_positive + 1) <= *r.a_invariant;
    r.window_bound_holds_natural0 = rho(2 * r.window_m_natural0 + 1) <= *r.a_invariant;
    if (r.window_m_positive) {
      r.window_bound_holds_positive = rho(2 * *r.window_m_positive + 1) <= *r.a_invariant;
    }
  }
  return r;
}

nlohmann::json to_json(const GroupSuiteReport& r) {
  nlohmann::json doc;
  doc["group"] = r.group;
  doc["order"] = r.order;
  doc["atom_count"] = r.atom_count;
  doc["davenport"] = r.davenport;
  doc["generic"] = r.generic;
  doc["catenary"] = r.catenary;
  doc["omega"] = r.omega;
  doc["tame"] = r.tame;
  doc["generic_expected"] = r.generic_expected;
  doc["catenary_equals_tame_expected"] = r.catenary_equals_tame_expected;
  doc["consistent"] = r.consistent;
  return doc;
}

nlohmann::json to_json(const RhoCheckReport& r) {
  auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json doc;
  doc["davenport"] = r.davenport;
  doc["k_max"] = r.k_max;
  doc["rho"] = r.rho;
  doc["even_rho_ok"] = r.even_rho_ok;
  doc["rho_window_max"] = to_string(r.rho_window_max);
  doc["elasticity_ok"] = r.elasticity_ok;
  doc["odd_excess"] = r.odd_excess;
  doc["m_natural0"] = opt(r.m_natural0);
  doc["m_positive"] = opt(r.m_positive);
  if (!r.m_natural0) doc["m_status"] = "not attained within window";
  doc["window_m_natural0"] = r.window_m_natural0;
  doc["window_m_positive"] = opt(r.window_m_positive);
  doc["window_bound_holds_natural0"] = opt(r.window_bound_holds_natural0);
  doc["window_bound_holds_positive"] = opt(r.window_bound_holds_positive);
  doc["a_invariant"] = opt(r.a_invariant);
  doc["bound_holds_natural0"] = opt(r.bound_holds_natural0);
  doc["bound_holds_positive"] = opt(r.bound_holds_positive);
  return doc;
}

}  // namespace factorinv
