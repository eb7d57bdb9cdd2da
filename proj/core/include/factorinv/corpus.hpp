#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorinv/numerical_monoid.hpp"

namespace factorinv {

/// Minimal generating sets of every numerical monoid with Frobenius number in
/// [1, f_max], found by walking the tree rooted at N0 whose children remove a
/// minimal generator larger than the Frobenius number. Sorted by (F, gens).
std::vector<std::vector<Int>> numerical_monoids_up_to_frobenius(Int f_max);

struct SearchRecord {
  std::vector<Int> generators;
  Int frobenius = 0;
  Int omega = 0;
  Int catenary = 0;
  Int tame = 0;
  bool generic = false;
  bool omega_lt_tame = false;
};

SearchRecord search_record(const NumericalMonoid& monoid);

/// Runs task(0), ..., task(count - 1) on `jobs` worker threads. The first
/// exception thrown by a task is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& task);

/// Records for every monoid with Frobenius number in [1, f_max], in
/// canonical (F, generators) order regardless of `jobs`.
std::vector<SearchRecord> search_frobenius(Int f_max, unsigned jobs);

struct CorpusSummary {
  Int f_max = 0;
  std::size_t count = 0;
  std::string convention;
  std::map<Int, std::size_t> count_by_frobenius;
  std::vector<std::vector<Int>> omega_lt_tame;
};

CorpusSummary summarize(const std::vector<SearchRecord>& records, Int f_max);

/// Header `generators;frobenius;omega;catenary;tame;generic;omega_lt_tame`.
void write_csv(std::ostream& out, const std::vector<SearchRecord>& records);

nlohmann::json to_json(const SearchRecord& record);
nlohmann::json to_json(const CorpusSummary& summary);

}  // namespace factorinv
