#include "factorinv/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "factorinv/invariants.hpp"
#include "factorinv/monoid.hpp"
#include "factorinv/presentations.hpp"

namespace factorinv {

namespace {

// Membership of [0, limit) as a bitmap; everything above limit is a member.
struct TreeNode {
  std::vector<bool> member;
  Int frobenius;
};

std::vector<Int> minimal_generators(const std::vector<bool>& member) {
  const auto limit = static_cast<Int>(member.size());
  auto in = [&](Int x) { return x >= limit || member[static_cast<std::size_t>(x)]; };
  Int multiplicity = 1;
  while (!in(multiplicity)) ++multiplicity;
  // Minimal generators lie below F + 1 + m <= limit + multiplicity.
  std::vector<Int> gens;
  for (Int x = 1; x < limit + multiplicity; ++x) {
    if (!in(x)) continue;
    bool decomposable = false;
    for (Int y = multiplicity; y <= x / 2 && !decomposable; ++y) {
      decomposable = in(y) && in(x - y);
    }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

}  // namespace

std::vector<std::vector<Int>> numerical_monoids_up_to_frobenius(Int f_max) {
  if (f_max < 1) throw DomainError("F_max must be at least 1");
  const auto limit = static_cast<std::size_t>(f_max + 1);
  std::vector<std::pair<Int, std::vector<Int>>> found;
  std::vector<TreeNode> stack{{std::vector<bool>(limit, true), -1}};
  while (!stack.empty()) {
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    for (Int g : minimal_generators(node.member)) {
      if (g <= node.frobenius || g > f_max) continue;
      TreeNode child{node.member, g};
      child.member[static_cast<std::size_t>(g)] = false;
      found.emplace_back(g, minimal_generators(child.member));
      stack.push_back(std::move(child));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<Int>> out;
  out.reserve(found.size());
  for (auto& [f, gens] : found) out.push_back(std::move(gens));
  return out;
}

SearchRecord search_record(const NumericalMonoid& numerical) {
  Monoid monoid(numerical);
  SearchRecord r;
  r.generators = numerical.generators();
  r.frobenius = numerical.frobenius_number();
  r.omega = omega(monoid);
  r.catenary = catenary(monoid);
  r.tame = tame_degree(monoid).value;
  r.generic = minimal_presentation(monoid).is_generic;
  r.omega_lt_tame = r.omega < r.tame;
  return r;
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& task) {
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<SearchRecord> search_frobenius(Int f_max, unsigned jobs) {
  auto corpus = numerical_monoids_up_to_frobenius(f_max);
  std::vector<SearchRecord> records(corpus.size());
  parallel_for(corpus.size(), jobs,
               [&](std::size_t i) { records[i] = search_record(NumericalMonoid(corpus[i])); });
  return records;
}

CorpusSummary summarize(const std::vector<SearchRecord>& records, Int f_max) {
  CorpusSummary s;
  s.f_max = f_max;
  s.count = records.size();
  s.convention = "Frobenius number in [1, F_max]; the trivial monoid N0 (F = -1) is excluded";
  for (const auto& r : records) {
    s.count_by_frobenius[r.frobenius] += 1;
    if (r.omega_lt_tame) s.omega_lt_tame.push_back(r.generators);
  }
  return s;
}

void write_csv(std::ostream& out, const std::vector<SearchRecord>& records) {
  out << "generators;frobenius;omega;catenary;tame;generic;omega_lt_tame\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
      if (i) out << ' ';
      out << r.generators[i];
    }
    out << ';' << r.frobenius << ';' << r.omega << ';' << r.catenary << ';' << r.tame << ';'
        << (r.generic ? "true" : "false") << ';' << (r.omega_lt_tame ? "true" : "false") << '\n';
  }
}

nlohmann::json to_json(const SearchRecord& r) {
  nlohmann::json doc;
  doc["generators"] = r.generators;
  doc["frobenius"] = r.frobenius;
  doc["omega"] = r.omega;
  doc["catenary"] = r.catenary;
  doc["tame"] = r.tame;
  doc["generic"] = r.generic;
  doc["omega_lt_tame"] = r.omega_lt_tame;
  return doc;
}

nlohmann::json to_json(const CorpusSummary& s) {
  nlohmann::json by_f = nlohmann::json::array();
  for (const auto& [f, n] : s.count_by_frobenius) by_f.push_back({{"frobenius", f}, {"count", n}});
  nlohmann::json doc;
  doc["f_max"] = s.f_max;
  doc["count"] = s.count;
  doc["count_including_trivial"] = s.count + 1;
  doc["convention"] = s.convention;
  doc["count_by_frobenius"] = by_f;
  doc["omega_lt_tame"] = s.omega_lt_tame;
  return doc;
}

}  // namespace factorinv
