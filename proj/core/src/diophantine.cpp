#include "factorinv/diophantine.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "factorinv/monoid.hpp"

namespace factorinv {

void DiophantineSystem::add_equation(std::vector<Int> coeffs, Int rhs) {
  if (coeffs.size() != num_vars_) throw DomainError("equation row has wrong length");
  equations_.push_back({std::move(coeffs), rhs});
}

void DiophantineSystem::add_congruence(std::vector<Int> coeffs, Int modulus, Int rhs) {
  if (coeffs.size() != num_vars_) throw DomainError("congruence row has wrong length");
  if (modulus < 1) throw DomainError("congruence modulus must be at least 1");
  congruences_.push_back({std::move(coeffs), modulus, rhs});
}

bool DiophantineSystem::is_homogeneous() const {
  return std::all_of(equations_.begin(), equations_.end(),
                     [](const EquationRow& r) { return r.rhs == 0; }) &&
         std::all_of(congruences_.begin(), congruences_.end(),
                     [](const CongruenceRow& r) { return mod_floor(r.rhs, r.modulus) == 0; });
}

bool DiophantineSystem::satisfied_by(std::span<const Int> x) const {
  if (x.size() != num_vars_) throw DomainError("vector has wrong length for system");
  for (const auto& row : equations_) {
    if (checked_dot(row.coeffs, x) != row.rhs) return false;
  }
  for (const auto& row : congruences_) {
    if (mod_floor(checked_sub(checked_dot(row.coeffs, x), row.rhs), row.modulus) != 0) {
      return false;
    }
  }
  return true;
}

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

// Dense integer matrix stored by columns.
struct ColumnMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  ColumnMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Int& at(std::size_t r, std::size_t c) { return data[c * rows + r]; }
  const Int* column(std::size_t c) const { return data.data() + c * rows; }
};

bool dominates(const std::vector<Int>& b, const std::vector<Int>& w) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] > w[i]) return false;
  }
  return true;
}

std::vector<std::vector<Int>> minimal_vectors(std::vector<std::vector<Int>> vs) {
  auto total = [](const std::vector<Int>& v) {
    Int s = 0;
    for (Int e : v) s += e;
    return s;
  };
  std::sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) {
    Int ta = total(a);
    Int tb = total(b);
    return ta != tb ? ta < tb : a < b;
  });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<std::vector<Int>> kept;
  for (auto& v : vs) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const auto& k) { return dominates(k, v); });
    if (!dominated) kept.push_back(std::move(v));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Contejean-Devie completion: all minimal nonzero v >= 0 with M v = 0. The
// optional capped variable is restricted to values {0, 1}.
std::vector<std::vector<Int>> completion(const ColumnMatrix& m,
                                         std::optional<std::size_t> capped,
                                         const SearchLimits& limits) {
  const std::size_t n = m.cols;
  const std::size_t r = m.rows;

  struct Node {
    std::vector<Int> v;
    std::vector<Int> defect;
  };

  std::vector<std::vector<Int>> basis;
  // index[j][k] lists basis elements whose j-th coordinate equals k.
  std::vector<std::vector<std::vector<std::size_t>>> index(n);

  auto add_basis = [&](const std::vector<Int>& v) {
    std::size_t id = basis.size();
    basis.push_back(v);
    for (std::size_t j = 0; j < n; ++j) {
      auto k = static_cast<std::size_t>(v[j]);
      if (k == 0) continue;
      if (index[j].size() <= k) index[j].resize(k + 1);
      index[j][k].push_back(id);
    }
  };

  std::vector<Node> frontier;
  for (std::size_t j = 0; j < n; ++j) {
    Node node{std::vector<Int>(n, 0), std::vector<Int>(m.column(j), m.column(j) + r)};
    node.v[j] = 1;
    frontier.push_back(std::move(node));
  }

  std::size_t expanded = 0;
  while (!frontier.empty()) {
    std::vector<const Node*> open;
    for (const Node& node : frontier) {
      bool zero = std::all_of(node.defect.begin(), node.defect.end(),
                              [](Int d) { return d == 0; });
      if (zero) {
        add_basis(node.v);
      } else {
        open.push_back(&node);
      }
    }

    std::unordered_set<std::vector<Int>, VectorHash> seen;
    std::vector<Node> next;
    for (const Node* node : open) {
      if (++expanded > limits.max_nodes) {
        throw ResourceError("Hilbert basis search exceeded its node budget");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (capped && *capped == j && node->v[j] >= 1) continue;
        const Int* col = m.column(j);
        Int dot = 0;
        for (std::size_t i = 0; i < r; ++i) dot = checked_add(dot, checked_mul(node->defect[i], col[i]));
        if (dot >= 0) continue;

        std::vector<Int> w = node->v;
        w[j] += 1;
        auto k = static_cast<std::size_t>(w[j]);
        bool dominated = false;
        if (k < index[j].size()) {
          for (std::size_t id : index[j][k]) {
            if (dominates(basis[id], w)) {
              dominated = true;
              break;
            }
          }
        }
        if (dominated || seen.contains(w)) continue;
        seen.insert(w);
        std::vector<Int> defect(r);
        for (std::size_t i = 0; i < r; ++i) defect[i] = checked_add(node->defect[i], col[i]);
        next.push_back({std::move(w), std::move(defect)});
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

// Variable layout: originals, one slack per congruence, one slack per
// equation when relation is at_least, then the homogenizing variable.
struct Encoded {
  ColumnMatrix matrix;
  std::size_t original = 0;
  std::optional<std::size_t> homogenizer;
};

Encoded encode(const DiophantineSystem& system, Relation relation, bool homogenize) {
  const std::size_t n = system.num_vars();
  const auto& eqs = system.equations();
  const auto& congs = system.congruences();
  const std::size_t at_least_slacks = relation == Relation::at_least ? eqs.size() : 0;
  std::size_t cols = n + congs.size() + at_least_slacks + (homogenize ? 1 : 0);
  std::size_t rows = eqs.size() + congs.size();
  Encoded enc{ColumnMatrix(rows, cols), n, std::nullopt};
  if (homogenize) enc.homogenizer = cols - 1;

  std::size_t row = 0;
  for (std::size_t e = 0; e < eqs.size(); ++e, ++row) {
    for (std::size_t j = 0; j < n; ++j) enc.matrix.at(row, j) = eqs[e].coeffs[j];
    if (relation == Relation::at_least) enc.matrix.at(row, n + congs.size() + e) = -1;
    if (homogenize) enc.matrix.at(row, cols - 1) = -eqs[e].rhs;
  }
  for (std::size_t c = 0; c < congs.size(); ++c, ++row) {
    const Int d = congs[c].modulus;
    for (std::size_t j = 0; j < n; ++j) enc.matrix.at(row, j) = mod_floor(congs[c].coeffs[j], d);
    enc.matrix.at(row, n + c) = -d;
    if (homogenize) enc.matrix.at(row, cols - 1) = -mod_floor(congs[c].rhs, d);
  }
  return enc;
}

}  // namespace

std::vector<std::vector<Int>> hilbert_basis(const DiophantineSystem& system,
                                            const SearchLimits& limits) {
  if (!system.is_homogeneous()) throw DomainError("hilbert_basis needs a homogeneous system");
  Encoded enc = encode(system, Relation::equals, false);
  auto raw = completion(enc.matrix, std::nullopt, limits);
  std::vector<std::vector<Int>> projected;
  projected.reserve(raw.size());
  for (auto& v : raw) {
    std::vector<Int> x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(enc.original));
    if (std::any_of(x.begin(), x.end(), [](Int e) { return e != 0; })) {
      projected.push_back(std::move(x));
    }
  }
  return minimal_vectors(std::move(projected));
}

std::vector<std::vector<Int>> minimal_inhomogeneous(const DiophantineSystem& system,
                                                    Relation relation,
                                                    const SearchLimits& limits) {
  Encoded enc = encode(system, relation, true);
  auto raw = completion(enc.matrix, enc.homogenizer, limits);
  std::vector<std::vector<Int>> projected;
  for (auto& v : raw) {
    if (v[*enc.homogenizer] != 1) continue;
    projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(enc.original));
  }
  return minimal_vectors(std::move(projected));
}

namespace {

std::vector<RelationPair> relation_atoms(const Monoid& monoid, bool equal_length,
                                         const SearchLimits& limits) {
  const std::size_t t = monoid.rank();
  DiophantineSystem system(2 * t);
  for (std::size_t k = 0; k < monoid.dimension(); ++k) {
    std::vector<Int> row(2 * t);
    for (std::size_t i = 0; i < t; ++i) {
      row[i] = monoid.atoms()[i][k];
      row[t + i] = -monoid.atoms()[i][k];
    }
    system.add_equation(std::move(row));
  }
  if (equal_length) {
    std::vector<Int> row(2 * t, 1);
    for (std::size_t i = 0; i < t; ++i) row[t + i] = -1;
    system.add_equation(std::move(row));
  }
  std::vector<RelationPair> pairs;
  for (auto& v : hilbert_basis(system, limits)) {
    pairs.push_back({Factorization(std::vector<Int>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(t))),
                     Factorization(std::vector<Int>(v.begin() + static_cast<std::ptrdiff_t>(t), v.end()))});
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

std::vector<RelationPair> kernel_atoms(const Monoid& monoid, const SearchLimits& limits) {
  return relation_atoms(monoid, false, limits);
}

std::vector<RelationPair> equal_kernel_atoms(const Monoid& monoid, const SearchLimits& limits) {
  return relation_atoms(monoid, true, limits);
}

}  // namespace factorinv
