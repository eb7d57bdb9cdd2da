#include "factorinv/monoid.hpp"

namespace factorinv {

Monoid::Monoid(NumericalMonoid numerical) : impl_(std::move(numerical)) {
  for (Int g : std::get<NumericalMonoid>(impl_).generators()) atoms_.push_back({g});
}

Monoid::Monoid(AffineMonoid affine) : impl_(std::move(affine)) {
  atoms_ = std::get<AffineMonoid>(impl_).atoms();
}

const NumericalMonoid& Monoid::numerical() const {
  if (!is_numerical()) throw DomainError("operation requires a numerical monoid");
  return std::get<NumericalMonoid>(impl_);
}

const AffineMonoid& Monoid::affine() const {
  if (is_numerical()) throw DomainError("operation requires an affine monoid");
  return std::get<AffineMonoid>(impl_);
}

std::size_t Monoid::dimension() const {
  return is_numerical() ? 1 : affine().ambient_dim();
}

bool Monoid::contains(const Element& a) const {
  if (a.size() != dimension()) {
    throw DomainError("element has dimension " + std::to_string(a.size()) + ", expected " +
                      std::to_string(dimension()));
  }
  return is_numerical() ? numerical().contains(a[0]) : affine().contains(a);
}

Element Monoid::image(const Factorization& z) const {
  if (z.rank() != rank()) throw DomainError("factorization rank does not match the monoid");
  Element out(dimension(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (z[i] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = checked_add(out[k], checked_mul(z[i], atoms_[i][k]));
    }
  }
  return out;
}

Element Monoid::add(const Element& a, const Element& b) const {
  Element out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_add(a[k], b.at(k));
  return out;
}

Element Monoid::subtract(const Element& a, const Element& b) const {
  Element out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_sub(a[k], b.at(k));
  return out;
}

std::string Monoid::to_string() const {
  return is_numerical() ? numerical().to_string() : affine().to_string();
}

}  // namespace factorinv
