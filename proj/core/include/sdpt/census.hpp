#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdpt/isomorphism.hpp"
#include "sdpt/semigroup.hpp"
#include "sdpt/tuple_algebra.hpp"

namespace sdpt {

struct CensusOptions {
  // Largest allowed number of tuples (|base|^arity); the enumeration walks
  // all subsets of that universe, so this is the knob that matters.
  std::size_t cap = 16;
  std::uint64_t node_budget = kDefaultIsoBudget;
  // When nonempty, results are read from and written to this directory,
  // keyed by the base's fingerprint and the arity.
  std::string cache_dir;
};

struct CensusResult {
  FiniteSemigroup base{FiniteSemigroup::from_parts({"e"}, {0})};
  int arity = 1;
  std::uint64_t total = 0;  // labeled subdirect subalgebras
  std::vector<TupleAlgebra> representatives;
  std::vector<std::uint64_t> class_sizes;  // aligned with representatives
  // False when some pairwise comparison hit the search budget; the class
  // list may then split one class in two, never merge distinct ones.
  bool dedup_exact = true;
  double wall_ms = 0.0;
  bool from_cache = false;
};

// Every subsemigroup of base^arity that projects onto the base in all
// coordinates, grouped into isomorphism classes. Fails with kind
// "size-cap" when |base|^arity exceeds the cap.
CensusResult enumerate_subdirect(const FiniteSemigroup& base, int arity,
                                 const CensusOptions& options = {});

}  // namespace sdpt
