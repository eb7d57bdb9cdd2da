#include "factorinv/affine_monoid.hpp"

#include <algorithm>

namespace factorinv {

AffineMonoid::AffineMonoid(std::size_t ambient_dim, std::vector<CongruenceRow> congruences,
                           std::vector<std::vector<Int>> equations)
    : ambient_dim_(ambient_dim),
      congruences_(std::move(congruences)),
      equations_(std::move(equations)) {
  if (ambient_dim_ == 0) throw DomainError("ambient dimension must be at least 1");
  for (auto& c : congruences_) {
    if (c.coeffs.size() != ambient_dim_) throw DomainError("congruence row has wrong length");
    if (c.modulus < 1) throw DomainError("congruence modulus must be at least 1");
    if (mod_floor(c.rhs, c.modulus) != 0) throw DomainError("congruence rows must be homogeneous");
  }
  for (const auto& e : equations_) {
    if (e.size() != ambient_dim_) throw DomainError("equation row has wrong length");
  }
  atoms_ = hilbert_basis(system());
  if (atoms_.empty()) throw DomainError("affine monoid has no nonzero elements");
}

DiophantineSystem AffineMonoid::system() const {
  DiophantineSystem sys(ambient_dim_);
  for (const auto& c : congruences_) sys.add_congruence(c.coeffs, c.modulus, 0);
  for (const auto& e : equations_) sys.add_equation(e, 0);
  return sys;
}

bool AffineMonoid::satisfies_rows(std::span<const Int> a) const {
  if (a.size() != ambient_dim_) {
    throw DomainError("element has dimension " + std::to_string(a.size()) + ", expected " +
                      std::to_string(ambient_dim_));
  }
  for (const auto& c : congruences_) {
    if (mod_floor(checked_dot(c.coeffs, a), c.modulus) != 0) return false;
  }
  for (const auto& e : equations_) {
    if (checked_dot(e, a) != 0) return false;
  }
  return true;
}

bool AffineMonoid::contains(std::span<const Int> a) const {
  if (a.size() != ambient_dim_) {
    throw DomainError("element has dimension " + std::to_string(a.size()) + ", expected " +
                      std::to_string(ambient_dim_));
  }
  if (std::any_of(a.begin(), a.end(), [](Int v) { return v < 0; })) return false;
  return satisfies_rows(a);
}

AffineMonoid AffineMonoid::from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("affine monoid must be a JSON object");
    auto n = doc.at("ambient_dim").get<std::size_t>();
    std::vector<CongruenceRow> congruences;
    if (doc.contains("congruences")) {
      for (const auto& c : doc.at("congruences")) {
        congruences.push_back({c.at("coeffs").get<std::vector<Int>>(), c.at("mod").get<Int>(), 0});
      }
    }
    std::vector<std::vector<Int>> equations;
    if (doc.contains("equations")) {
      equations = doc.at("equations").get<std::vector<std::vector<Int>>>();
    }
    return AffineMonoid(n, std::move(congruences), std::move(equations));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid affine monoid document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid affine monoid: ") + e.what());
  }
}

AffineMonoid AffineMonoid::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

nlohmann::json AffineMonoid::to_json() const {
  nlohmann::json congs = nlohmann::json::array();
  for (const auto& c : congruences_) congs.push_back({{"coeffs", c.coeffs}, {"mod", c.modulus}});
  nlohmann::json doc;
  doc["ambient_dim"] = ambient_dim_;
  doc["congruences"] = congs;
  doc["equations"] = equations_;
  return doc;
}

std::string AffineMonoid::to_string() const {
  return "affine(dim=" + std::to_string(ambient_dim_) + ", atoms=" +
         std::to_string(atoms_.size()) + ")";
}

}  // namespace factorinv
