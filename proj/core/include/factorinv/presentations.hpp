#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorinv/diophantine.hpp"
#include "factorinv/factorization.hpp"
#include "factorinv/monoid.hpp"

namespace factorinv {

struct Presentation {
  /// Pairs (other class representative, root class representative).
  std::vector<RelationPair> pairs;
  std::vector<Element> betti_elements;
  bool is_minimal = true;
  bool is_unique_minimal = false;
  bool is_generic = false;
};

/// Star-shaped minimal presentation: per Betti element, each R-class other
/// than the root is joined to the root by their lexicographically smallest
/// factorizations. The root class holds the smallest factorization overall.
Presentation minimal_presentation(const Monoid& monoid);

/// The canonical minimal presentation when it is generic.
std::optional<Presentation> has_generic_presentation(const Monoid& monoid);

/// a(S) = max |x| over atoms (x,y) of the monoid of relations.
Int a_invariant(const Monoid& monoid, const SearchLimits& limits = {});

/// max |x| over atoms of the equal-length relations; bounds c_equal(S).
Int equal_catenary_bound(const Monoid& monoid, const SearchLimits& limits = {});

struct MinADResult {
  Int d = 0;
  Int length_cap = 0;
  /// Divisibility-minimal x with d + |x| in L(pi(x)) and |x| <= length_cap.
  std::vector<Factorization> elements;
  /// Largest |x| among the elements, 0 when none was found.
  Int last_level_found = 0;
  /// a(S)-window stopping rule: no new minimal element appeared in the last
  /// a(S) scanned length levels. This is a heuristic signal, not a proof.
  bool stopping_rule_met = false;
  Int window = 0;
};

MinADResult min_a_d_search(const Monoid& monoid, Int d, Int length_cap);

nlohmann::json to_json(const RelationPair& pair);
nlohmann::json to_json(const Presentation& presentation);

}  // namespace factorinv
