#include "factorinv/numerical_monoid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <queue>

namespace factorinv {

namespace {

constexpr Int kMaxGenerator = 1'000'000;

}  // namespace

struct NumericalMonoid::Cache {
  std::mutex mutex;
  std::map<Int, std::vector<Int>> apery;
  // Per suffix i: gcd of generators i..t-1 and residue minima of the scaled
  // suffix modulo its scaled smallest generator.
  std::vector<Int> suffix_gcd;
  std::vector<std::vector<Int>> suffix_minima;
};

std::vector<Int> residue_minima(std::span<const Int> gens, Int m) {
  if (m <= 0) throw DomainError("modulus must be positive");
  std::vector<Int> dist(static_cast<std::size_t>(m), -1);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens) {
      Int nd = checked_add(d, g);
      Int nr = (r + g) % m;
      Int& slot = dist[static_cast<std::size_t>(nr)];
      if (slot < 0 || nd < slot) {
        slot = nd;
        queue.push({nd, nr});
      }
    }
  }
  return dist;
}

NumericalMonoid::NumericalMonoid(std::vector<Int> generators, bool allow_trivial)
    : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (generators_.empty()) throw DomainError("numerical monoid needs at least one generator");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] < 1 || generators_[i] > kMaxGenerator) {
      throw DomainError("generator out of range: " + std::to_string(generators_[i]));
    }
    if (i > 0 && generators_[i] <= generators_[i - 1]) {
      throw DomainError("generators must be strictly increasing");
    }
  }
  if (generators_.front() == 1) {
    if (!allow_trivial || generators_.size() != 1) {
      throw DomainError("the trivial monoid N0 is not admitted here");
    }
  }
  if (gcd_of(generators_) != 1) throw DomainError("generators must have gcd 1");
  const Int n1 = generators_.front();
  for (std::size_t i = 1; i < generators_.size(); ++i) {
    auto minima = residue_minima(std::span<const Int>(generators_.data(), i), n1);
    Int m = minima[static_cast<std::size_t>(generators_[i] % n1)];
    if (m >= 0 && m <= generators_[i]) {
      throw DomainError("generator " + std::to_string(generators_[i]) +
                        " is not minimal");
    }
  }

  const std::size_t t = generators_.size();
  cache_->suffix_gcd.resize(t);
  cache_->suffix_minima.resize(t);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<Int> scaled(generators_.begin() + static_cast<std::ptrdiff_t>(i),
                            generators_.end());
    Int g = gcd_of(scaled);
    for (Int& v : scaled) v /= g;
    cache_->suffix_gcd[i] = g;
    cache_->suffix_minima[i] = residue_minima(scaled, scaled.front());
  }
}

NumericalMonoid NumericalMonoid::generated_by(std::vector<Int> values) {
  std::erase_if(values, [](Int v) { return v == 0; });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw DomainError("numerical monoid needs at least one generator");
  if (values.front() < 0) throw DomainError("generators must be non-negative");
  if (gcd_of(values) != 1) throw DomainError("generators must have gcd 1");
  std::vector<Int> minimal;
  for (Int v : values) {
    if (!minimal.empty()) {
      auto minima = residue_minima(minimal, minimal.front());
      Int m = minima[static_cast<std::size_t>(v % minimal.front())];
      if (m >= 0 && m <= v) continue;
    }
    minimal.push_back(v);
  }
  const bool trivial = minimal.front() == 1;
  return NumericalMonoid(std::move(minimal), trivial);
}

NumericalMonoid NumericalMonoid::parse(std::string_view literal) {
  std::vector<Int> values;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    std::size_t comma = literal.find(',', pos);
    if (comma == std::string_view::npos) comma = literal.size();
    std::string_view token = literal.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("invalid generator '" + std::string(token) + "' in '" +
                       std::string(literal) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  std::vector<Int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  try {
    return NumericalMonoid(sorted);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid numerical monoid '") + std::string(literal) +
                     "': " + e.what());
  }
}

const std::vector<Int>& NumericalMonoid::apery_by_residue(Int m) const {
  if (m <= 0) throw DomainError("Apery set requires a positive modulus");
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->apery.find(m);
  if (it == cache_->apery.end()) {
    it = cache_->apery.emplace(m, residue_minima(generators_, m)).first;
  }
  return it->second;
}

bool NumericalMonoid::contains(Int a) const {
  if (a < 0) return false;
  return suffix_contains(0, a);
}

bool NumericalMonoid::suffix_contains(std::size_t first, Int r) const {
  if (r < 0) return false;
  if (r == 0) return true;
  if (first >= generators_.size()) return false;
  Int g = cache_->suffix_gcd[first];
  if (r % g != 0) return false;
  r /= g;
  const auto& minima = cache_->suffix_minima[first];
  Int m = minima[static_cast<std::size_t>(r % static_cast<Int>(minima.size()))];
  return m >= 0 && m <= r;
}

std::vector<Int> NumericalMonoid::apery_set(Int m) const {
  if (m <= 0 || !contains(m)) {
    throw DomainError("Apery set requires a positive member, got " + std::to_string(m));
  }
  std::vector<Int> result = apery_by_residue(m);
  std::sort(result.begin(), result.end());
  return result;
}

Int NumericalMonoid::frobenius_number() const {
  const auto& ap = apery_by_residue(multiplicity());
  return *std::max_element(ap.begin(), ap.end()) - multiplicity();
}

std::string NumericalMonoid::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(generators_[i]);
  }
  return s + ">";
}

}  // namespace factorinv
