#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorinv/diophantine.hpp"
#include "factorinv/integer.hpp"

namespace factorinv {

/// The saturated monoid of all x in N0^n satisfying a system of homogeneous
/// linear congruences and equations. Atoms are the Hilbert basis of the
/// system, sorted lexicographically.
class AffineMonoid {
 public:
  AffineMonoid(std::size_t ambient_dim, std::vector<CongruenceRow> congruences,
               std::vector<std::vector<Int>> equations);

  /// Reads {"ambient_dim": n, "congruences": [{"coeffs": [...], "mod": d}],
  /// "equations": [[...]]}. Missing lists are empty.
  static AffineMonoid from_json(const nlohmann::json& doc);
  static AffineMonoid parse(std::string_view json_text);
  nlohmann::json to_json() const;

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<CongruenceRow>& congruences() const { return congruences_; }
  const std::vector<std::vector<Int>>& equations() const { return equations_; }
  const std::vector<std::vector<Int>>& atoms() const { return atoms_; }
  std::size_t rank() const { return atoms_.size(); }

  /// The defining homogeneous system over N0^ambient_dim.
  DiophantineSystem system() const;

  /// Membership: non-negative and satisfying every row.
  bool contains(std::span<const Int> a) const;
  /// Satisfies every row over Z (sign ignored).
  bool satisfies_rows(std::span<const Int> a) const;

  std::string to_string() const;

 private:
  std::size_t ambient_dim_;
  std::vector<CongruenceRow> congruences_;
  std::vector<std::vector<Int>> equations_;
  std::vector<std::vector<Int>> atoms_;
};

}  // namespace factorinv
