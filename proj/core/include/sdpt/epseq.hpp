#pragma once

#include <string>
#include <vector>

#include "sdpt/semigroup.hpp"
#include "sdpt/tuple_algebra.hpp"

namespace sdpt {

// Longest period the pointwise product will expand to. Products whose
// period lengths have a larger least common multiple are refused.
inline constexpr std::size_t kPeriodCap = std::size_t{1} << 16;

// An eventually periodic infinite sequence over a finite base semigroup,
// held in canonical form: the period is primitive (no shorter rotation
// repeats it) and the preperiod is as short as possible. Two sequences
// over the same base are pointwise equal exactly when their canonical
// forms coincide, so operator== decides sequence equality.
class EpSeq {
 public:
  static EpSeq make(FiniteSemigroup base, std::vector<int> pre, std::vector<int> per);
  static EpSeq constant(FiniteSemigroup base, int value);

  const FiniteSemigroup& base() const { return base_; }
  const std::vector<int>& preperiod() const { return pre_; }
  const std::vector<int>& period() const { return per_; }

  // Term i of the infinite sequence, 0-based.
  int at(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
  }

  bool operator==(const EpSeq&) const = default;

 private:
  EpSeq() = default;
  FiniteSemigroup base_{FiniteSemigroup::from_parts({"e"}, {0})};
  std::vector<int> pre_;
  std::vector<int> per_;
};

// Pointwise product. Fails with kind "base-mismatch" when the operands
// live over different bases, and "period-cap" when the combined period
// would exceed kPeriodCap.
EpSeq ep_product(const EpSeq& a, const EpSeq& b);

// Pointwise order over a semilattice base: a <= b when a*b = a.
// Fails with kind "not-semilattice" otherwise.
bool ep_leq(const EpSeq& a, const EpSeq& b);

// The first `arity` terms.
Tuple ep_truncate(const EpSeq& a, int arity);

// Sends each term of a sequence over a commutative base to the idempotent
// of its archimedean component, producing a sequence over the base's
// idempotent semilattice.
EpSeq ep_phi(const EpSeq& a);

// Literal form "pre|period" with comma-separated element names, e.g.
// "|1,0" (no preperiod) or "0,a|b". The period part cannot be empty.
EpSeq parse_epseq(const FiniteSemigroup& base, const std::string& literal);
std::string epseq_literal(const EpSeq& a);

}  // namespace sdpt
