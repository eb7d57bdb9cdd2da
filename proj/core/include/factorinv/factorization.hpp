#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "factorinv/integer.hpp"

namespace factorinv {

/// Exponent vector over a monoid's atom list, i.e. an element of the free
/// factorization monoid. Indices follow the monoid's fixed atom order.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<Int> exponents);

  static Factorization zero(std::size_t rank);
  static Factorization unit(std::size_t rank, std::size_t atom);

  std::size_t rank() const { return exponents_.size(); }
  std::span<const Int> exponents() const { return exponents_; }
  const std::vector<Int>& vector() const { return exponents_; }
  Int operator[](std::size_t i) const { return exponents_[i]; }

  /// Number of atoms counted with multiplicity.
  Int length() const;
  bool is_zero() const;
  bool contains_atom(std::size_t i) const { return exponents_[i] > 0; }
  std::vector<std::size_t> support() const;
  bool shares_atom_with(const Factorization& other) const;

  /// Componentwise <=, i.e. divisibility in the free monoid.
  bool divides(const Factorization& other) const;

  Factorization operator+(const Factorization& other) const;
  /// Requires `other` to divide `*this`.
  Factorization operator-(const Factorization& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<Int> exponents_;
};

Factorization gcd(const Factorization& a, const Factorization& b);

/// max(|z - g|, |z' - g|) with g = gcd(z, z').
Int distance(const Factorization& z, const Factorization& w);

/// Minimum pairwise distance; 0 if either set is empty or they intersect.
Int set_distance(std::span<const Factorization> xs,
                 std::span<const Factorization> ys);

/// Keeps the divisibility-minimal members, sorted lexicographically.
std::vector<Factorization> minimal_elements(std::vector<Factorization> zs);

/// A pair of factorizations with the same image.
struct RelationPair {
  Factorization left;
  Factorization right;

  RelationPair swapped() const { return {right, left}; }
  friend auto operator<=>(const RelationPair&, const RelationPair&) = default;
  friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

struct FactorizationHash {
  std::size_t operator()(const Factorization& z) const;
};

}  // namespace factorinv
