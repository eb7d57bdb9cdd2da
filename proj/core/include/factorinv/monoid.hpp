#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "factorinv/affine_monoid.hpp"
#include "factorinv/factorization.hpp"
#include "factorinv/numerical_monoid.hpp"

namespace factorinv {

/// Monoid element. Numerical elements are vectors of length one.
using Element = std::vector<Int>;

/// A finitely generated reduced monoid together with its fixed atom order.
class Monoid {
 public:
  Monoid(NumericalMonoid numerical);  // NOLINT(google-explicit-constructor)
  Monoid(AffineMonoid affine);        // NOLINT(google-explicit-constructor)

  bool is_numerical() const { return std::holds_alternative<NumericalMonoid>(impl_); }
  const NumericalMonoid& numerical() const;
  const AffineMonoid& affine() const;

  /// Number of atoms t.
  std::size_t rank() const { return atoms_.size(); }
  /// Length of element vectors: 1 for numerical monoids.
  std::size_t dimension() const;
  const std::vector<Element>& atoms() const { return atoms_; }
  const Element& atom(std::size_t i) const { return atoms_.at(i); }

  bool contains(const Element& a) const;
  /// pi(z) = sum z_i u_i.
  Element image(const Factorization& z) const;
  Element zero() const { return Element(dimension(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element subtract(const Element& a, const Element& b) const;

  std::string to_string() const;

 private:
  std::variant<NumericalMonoid, AffineMonoid> impl_;
  std::vector<Element> atoms_;
};

}  // namespace factorinv
