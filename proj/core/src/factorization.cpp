#include "factorinv/factorization.hpp"

#include <algorithm>
#include <limits>

namespace factorinv {

Factorization::Factorization(std::vector<Int> exponents)
    : exponents_(std::move(exponents)) {
  for (Int e : exponents_) {
    if (e < 0) throw DomainError("factorization exponents must be non-negative");
  }
}

Factorization Factorization::zero(std::size_t rank) {
  return Factorization(std::vector<Int>(rank, 0));
}

Factorization Factorization::unit(std::size_t rank, std::size_t atom) {
  std::vector<Int> v(rank, 0);
  v.at(atom) = 1;
  return Factorization(std::move(v));
}

Int Factorization::length() const {
  Int n = 0;
  for (Int e : exponents_) n = checked_add(n, e);
  return n;
}

bool Factorization::is_zero() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Int e) { return e == 0; });
}

std::vector<std::size_t> Factorization::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) s.push_back(i);
  }
  return s;
}

bool Factorization::shares_atom_with(const Factorization& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0 && other.exponents_[i] > 0) return true;
  }
  return false;
}

bool Factorization::divides(const Factorization& other) const {
  if (rank() != other.rank()) throw DomainError("factorization rank mismatch");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Factorization Factorization::operator+(const Factorization& other) const {
  if (rank() != other.rank()) throw DomainError("factorization rank mismatch");
  std::vector<Int> v(exponents_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = checked_add(exponents_[i], other.exponents_[i]);
  }
  return Factorization(std::move(v));
}

Factorization Factorization::operator-(const Factorization& other) const {
  if (!other.divides(*this)) throw DomainError("subtrahend does not divide factorization");
  std::vector<Int> v(exponents_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = exponents_[i] - other.exponents_[i];
  return Factorization(std::move(v));
}

std::string Factorization::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exponents_[i]);
  }
  return s + ")";
}

Factorization gcd(const Factorization& a, const Factorization& b) {
  if (a.rank() != b.rank()) throw DomainError("factorization rank mismatch");
  std::vector<Int> v(a.rank());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a[i], b[i]);
  return Factorization(std::move(v));
}

Int distance(const Factorization& z, const Factorization& w) {
  if (z.rank() != w.rank()) throw DomainError("factorization rank mismatch");
  Int left = 0;
  Int right = 0;
  for (std::size_t i = 0; i < z.rank(); ++i) {
    Int g = std::min(z[i], w[i]);
    left += z[i] - g;
    right += w[i] - g;
  }
  return std::max(left, right);
}

Int set_distance(std::span<const Factorization> xs,
                 std::span<const Factorization> ys) {
  if (xs.empty() || ys.empty()) return 0;
  Int best = std::numeric_limits<Int>::max();
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      best = std::min(best, distance(x, y));
      if (best == 0) return 0;
    }
  }
  return best;
}

std::vector<Factorization> minimal_elements(std::vector<Factorization> zs) {
  // Sorting by length first lets each candidate be checked only against
  // already accepted (shorter or equal) elements.
  std::sort(zs.begin(), zs.end(), [](const Factorization& a, const Factorization& b) {
    Int la = a.length();
    Int lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  std::vector<Factorization> kept;
  for (auto& z : zs) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Factorization& m) { return m.divides(z); });
    if (!dominated) kept.push_back(std::move(z));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::size_t FactorizationHash::operator()(const Factorization& z) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int e : z.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace factorinv
