#include "factorinv/factorizations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "factorinv/diophantine.hpp"

namespace factorinv {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int e : v) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void require_member(const Monoid& monoid, const Element& a) {
  if (!monoid.contains(a)) throw DomainError("element is not a member of " + monoid.to_string());
}

class NumericalEnumerator {
 public:
  NumericalEnumerator(const NumericalMonoid& monoid, const EnumerationLimits& limits,
                      const std::function<void(const std::vector<Int>&)>& visit)
      : monoid_(monoid),
        gens_(monoid.generators()),
        limits_(limits),
        visit_(visit),
        current_(gens_.size(), 0) {}

  void run(Int a, std::size_t first) {
    if (first >= gens_.size()) {
      if (a == 0) emit();
      return;
    }
    if (!monoid_.suffix_contains(first, a)) return;
    descend(first, a);
  }

 private:
  void emit() {
    if (++count_ > limits_.max_factorizations) {
      throw ResourceError("factorization count exceeded " +
                          std::to_string(limits_.max_factorizations));
    }
    visit_(current_);
  }

  void descend(std::size_t i, Int r) {
    const std::size_t t = gens_.size();
    if (i + 1 == t) {
      if (r % gens_[i] == 0) {
        current_[i] = r / gens_[i];
        emit();
        current_[i] = 0;
      }
      return;
    }
    for (Int x = 0; x * gens_[i] <= r; ++x) {
      Int rest = r - x * gens_[i];
      if (!monoid_.suffix_contains(i + 1, rest)) continue;
      current_[i] = x;
      descend(i + 1, rest);
    }
    current_[i] = 0;
  }

  const NumericalMonoid& monoid_;
  const std::vector<Int>& gens_;
  const EnumerationLimits& limits_;
  const std::function<void(const std::vector<Int>&)>& visit_;
  std::vector<Int> current_;
  std::size_t count_ = 0;
};

class AffineEnumerator {
 public:
  AffineEnumerator(const std::vector<Element>& atoms, const EnumerationLimits& limits)
      : atoms_(atoms), limits_(limits), current_(atoms.size(), 0) {}

  std::vector<Factorization> run(const Element& a) {
    descend(0, a);
    return std::move(out_);
  }

 private:
  // Returns whether at least one factorization was found below this node.
  bool descend(std::size_t i, const Element& residual) {
    const std::size_t t = atoms_.size();
    const Element& u = atoms_[i];
    Int bound = std::numeric_limits<Int>::max();
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] > 0) bound = std::min(bound, residual[k] / u[k]);
    }
    if (i + 1 == t) {
      Element rest = residual;
      for (std::size_t k = 0; k < u.size(); ++k) rest[k] -= bound * u[k];
      // residual must be an exact multiple of the last atom
      Int mult = bound;
      bool exact = std::all_of(rest.begin(), rest.end(), [](Int v) { return v == 0; });
      if (!exact) return false;
      current_[i] = mult;
      emit();
      current_[i] = 0;
      return true;
    }
    std::vector<Int> key;
    key.reserve(residual.size() + 1);
    key.push_back(static_cast<Int>(i));
    key.insert(key.end(), residual.begin(), residual.end());
    if (dead_.contains(key)) return false;

    bool found = false;
    Element rest = residual;
    for (Int x = 0; x <= bound; ++x) {
      current_[i] = x;
      if (descend(i + 1, rest)) found = true;
      for (std::size_t k = 0; k < u.size(); ++k) rest[k] -= u[k];
    }
    current_[i] = 0;
    if (!found) dead_.insert(std::move(key));
    return found;
  }

  void emit() {
    if (out_.size() >= limits_.max_factorizations) {
      throw ResourceError("factorization count exceeded " +
                          std::to_string(limits_.max_factorizations));
    }
    out_.emplace_back(current_);
  }

  const std::vector<Element>& atoms_;
  const EnumerationLimits& limits_;
  std::vector<Int> current_;
  std::vector<Factorization> out_;
  std::unordered_set<std::vector<Int>, VectorHash> dead_;
};

Int omega_bound(const Monoid& monoid) {
  Int best = 0;
  for (const auto& u : monoid.atoms()) {
    for (const auto& z : min_z_shifted(monoid, u)) best = std::max(best, z.length());
  }
  return best;
}

std::vector<Element> filter_betti(const Monoid& monoid, std::vector<Element> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Element> out;
  for (auto& b : candidates) {
    if (r_classes(monoid, b).size() >= 2) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

void for_each_factorization(const NumericalMonoid& monoid, Int a, std::size_t first,
                            const std::function<void(const std::vector<Int>&)>& visit,
                            const EnumerationLimits& limits) {
  if (a < 0) return;
  NumericalEnumerator(monoid, limits, visit).run(a, first);
}

std::vector<Factorization> factorizations(const Monoid& monoid, const Element& a,
                                          const EnumerationLimits& limits) {
  require_member(monoid, a);
  if (monoid.is_numerical()) {
    std::vector<Factorization> out;
    for_each_factorization(
        monoid.numerical(), a[0], 0,
        [&](const std::vector<Int>& z) { out.emplace_back(z); }, limits);
    return out;
  }
  return AffineEnumerator(monoid.atoms(), limits).run(a);
}

bool LengthProfile::is_arithmetic_progression(Int d) const {
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (lengths[i] - lengths[i - 1] != d) return false;
  }
  return true;
}

LengthProfile make_length_profile(std::vector<Int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  LengthProfile p;
  p.lengths = std::move(lengths);
  if (p.lengths.empty()) return p;
  p.min = p.lengths.front();
  p.max = p.lengths.back();
  std::set<Int> gaps;
  for (std::size_t i = 1; i < p.lengths.size(); ++i) gaps.insert(p.lengths[i] - p.lengths[i - 1]);
  p.delta.assign(gaps.begin(), gaps.end());
  p.elasticity = p.min == 0 ? Rational(1) : Rational(p.max, p.min);
  return p;
}

LengthProfile length_profile(const Monoid& monoid, const Element& a) {
  std::vector<Int> lengths;
  for (const auto& z : factorizations(monoid, a)) lengths.push_back(z.length());
  return make_length_profile(std::move(lengths));
}

Int RClassPartition::mu() const {
  Int m = 0;
  for (Int v : min_lengths) m = std::max(m, v);
  return m;
}

RClassPartition r_classes(std::span<const Factorization> zs) {
  RClassPartition out;
  if (zs.empty()) return out;
  const std::size_t n = zs.size();
  const std::size_t t = zs.front().rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t anchor = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (zs[k][i] == 0) continue;
      if (anchor == n) {
        anchor = k;
      } else {
        parent[find(k)] = find(anchor);
      }
    }
  }
  std::vector<std::vector<Factorization>> groups(n);
  for (std::size_t k = 0; k < n; ++k) groups[find(k)].push_back(zs[k]);
  for (auto& g : groups) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end());
    out.classes.push_back(std::move(g));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& c : out.classes) {
    Int m = std::numeric_limits<Int>::max();
    for (const auto& z : c) m = std::min(m, z.length());
    out.min_lengths.push_back(m);
  }
  return out;
}

RClassPartition r_classes(const Monoid& monoid, const Element& a) {
  auto zs = factorizations(monoid, a);
  return r_classes(zs);
}

std::vector<Element> betti_elements(const Monoid& monoid) {
  std::vector<Element> candidates;
  if (monoid.is_numerical()) {
    const auto& s = monoid.numerical();
    const auto& gens = s.generators();
    for (Int w : s.apery_by_residue(s.multiplicity())) {
      if (w == 0) continue;
      for (std::size_t i = 1; i < gens.size(); ++i) candidates.push_back({w + gens[i]});
    }
    return filter_betti(monoid, std::move(candidates));
  }
  // Every R-class of a Betti element has a factorization of length at most
  // c(S) <= omega(S), so the element is a product of at most omega atoms.
  const Int bound = omega_bound(monoid);
  std::unordered_set<Element, VectorHash> level(monoid.atoms().begin(), monoid.atoms().end());
  for (Int k = 2; k <= bound; ++k) {
    std::unordered_set<Element, VectorHash> next;
    for (const auto& a : level) {
      for (const auto& u : monoid.atoms()) next.insert(monoid.add(a, u));
    }
    candidates.insert(candidates.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return filter_betti(monoid, std::move(candidates));
}

std::vector<Element> betti_elements_from_kernel(const Monoid& monoid) {
  std::vector<Element> candidates;
  for (const auto& pair : kernel_atoms(monoid)) {
    if (pair.left != pair.right) candidates.push_back(monoid.image(pair.left));
  }
  return filter_betti(monoid, std::move(candidates));
}

std::vector<Factorization> min_z_shifted(const Monoid& monoid, const Element& s) {
  if (s.size() != monoid.dimension()) throw DomainError("shift has wrong dimension");
  const std::size_t t = monoid.rank();
  if (std::all_of(s.begin(), s.end(), [](Int v) { return v == 0; })) {
    return {Factorization::zero(t)};
  }
  std::vector<Factorization> out;

  if (monoid.is_numerical()) {
    const auto& S = monoid.numerical();
    const auto& gens = S.generators();
    const Int shift = s[0];
    if (shift < 0) throw DomainError("shift must be non-negative");
    // A minimal z with z_i > 0 satisfies pi(z) - s in Ap(S, n_i); each z is
    // produced once, from the smallest index in its support.
    for (std::size_t j = 0; j < t; ++j) {
      for (Int w : S.apery_by_residue(gens[j])) {
        const Int a = checked_add(shift, w);
        const Int base = a - gens[j];
        if (!S.contains(base)) continue;
        for_each_factorization(S, base, j, [&](const std::vector<Int>& rest) {
          for (std::size_t i = j + 1; i < t; ++i) {
            if (rest[i] > 0 && S.contains(a - gens[i] - shift)) return;
          }
          std::vector<Int> z = rest;
          z[j] += 1;
          out.emplace_back(std::move(z));
        });
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const auto& A = monoid.affine();
  if (!A.satisfies_rows(s)) return out;
  const auto& atoms = monoid.atoms();
  const std::size_t n = s.size();
  // Minimal covers of s by atoms: branch on the first uncovered coordinate.
  std::unordered_set<std::vector<Int>, VectorHash> seen;
  std::vector<Int> x(t, 0);
  Element sum(n, 0);
  std::function<void()> search = [&]() {
    std::size_t k = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (sum[c] < s[c]) {
        k = c;
        break;
      }
    }
    if (k == n) {
      for (std::size_t i = 0; i < t; ++i) {
        if (x[i] == 0) continue;
        bool still_covers = true;
        for (std::size_t c = 0; c < n; ++c) {
          if (sum[c] - atoms[i][c] < s[c]) {
            still_covers = false;
            break;
          }
        }
        if (still_covers) return;
      }
      out.emplace_back(x);
      return;
    }
    for (std::size_t i = 0; i < t; ++i) {
      if (atoms[i][k] <= 0) continue;
      x[i] += 1;
      if (seen.insert(x).second) {
        for (std::size_t c = 0; c < n; ++c) sum[c] += atoms[i][c];
        search();
        for (std::size_t c = 0; c < n; ++c) sum[c] -= atoms[i][c];
      }
      x[i] -= 1;
    }
  };
  search();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Factorization> min_z_shifted_diophantine(const Monoid& monoid, const Element& s) {
  const auto& A = monoid.affine();
  if (s.size() != A.ambient_dim()) throw DomainError("shift has wrong dimension");
  if (!A.satisfies_rows(s)) return {};
  const std::size_t t = monoid.rank();
  DiophantineSystem system(t);
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::vector<Int> row(t);
    for (std::size_t i = 0; i < t; ++i) row[i] = monoid.atoms()[i][k];
    system.add_equation(std::move(row), s[k]);
  }
  std::vector<Factorization> out;
  for (auto& v : minimal_inhomogeneous(system, Relation::at_least)) out.emplace_back(std::move(v));
  return out;
}

}  // namespace factorinv
