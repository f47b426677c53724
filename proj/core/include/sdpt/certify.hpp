#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdpt/isomorphism.hpp"
#include "sdpt/semigroup.hpp"
#include "sdpt/tuple_algebra.hpp"

namespace sdpt {

// Per-element count of left divisors: how many t satisfy x in tS.
std::vector<int> divisor_counts(const FiniteSemigroup& s);

// The multiset of divisor counts, with an absorbing zero (when present)
// reported separately instead of drowning the profile.
struct DivisorSpectrum {
  std::vector<int> counts;  // ascending, zero element excluded
  std::optional<int> zero_divisors;
  bool operator==(const DivisorSpectrum&) const = default;
};

DivisorSpectrum divisor_spectrum(const FiniteSemigroup& s);

// Roots under w -> w^exponent. Elements fixed by the power map form the
// periodic part; counts ignore them, so the spectrum picks out how many
// transient elements land on each target.
struct RootSpectrum {
  int exponent = 2;
  std::vector<bool> fixed;  // w^exponent == w
  std::vector<int> counts;  // per element: transient roots landing there
};

// Fails with kind "exponent" when the exponent is below 2.
RootSpectrum root_spectrum(const FiniteSemigroup& s, int exponent);

// The nonzero entries of counts, ascending: the label-free form.
std::vector<int> transient_root_counts(const RootSpectrum& spec);

// Per-element (ideal size, filter size) pairs of a semilattice, sorted.
// Fails with kind "not-semilattice" otherwise.
std::vector<std::pair<int, int>> ideal_filter_profile(const FiniteSemigroup& s);

// Outcome of a distinguishing run: which invariant separated the operands
// (or that none did), with the two payload values it compared.
struct Certificate {
  std::string kind;     // "divisor-spectrum", "root-spectrum",
                        // "idempotent-semilattice", "principal-ideal-filter",
                        // "exhaustive"
  std::string verdict;  // "distinguished" | "equivalent" | "unknown"
  nlohmann::ordered_json left;
  nlohmann::ordered_json right;
  nlohmann::ordered_json replay;  // per-step log when requested
};

struct DistinguishOptions {
  bool cross_base = false;
  std::uint64_t node_budget = kDefaultIsoBudget;
  bool replay = false;
};

// Runs the invariant ladder over two finite algebras: divisor spectrum,
// root spectrum (when both kernels are groups of equal order at least 2),
// idempotent semilattice (commutative operands), ideal-filter profile
// (semilattice operands), then exhaustive isomorphism search. Operands
// must be closed (kind "not-closed") and, unless cross_base is set, share
// their base (kind "base-mismatch").
Certificate distinguish(const TupleAlgebra& a, const TupleAlgebra& b,
                        const DistinguishOptions& options = {});

}  // namespace sdpt
