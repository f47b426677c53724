#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdpt/epseq.hpp"
#include "sdpt/semigroup.hpp"
#include "sdpt/tuple_algebra.hpp"

namespace sdpt {

// A strictly increasing sequence of positive integers, given in one of
// three literal forms:
//   "3k"          multiples: 3, 6, 9, ...
//   ">=4"         consecutive from an offset: 4, 5, 6, ...
//   "[3,9;+3]"    explicit prefix, then fixed stride: 3, 9, 12, 15, ...
// Parsing and validation fail with kind "m-spec".
class MSpec {
 public:
  enum class Kind { multiples, offset, explicit_prefix };

  static MSpec parse(const std::string& literal);

  Kind kind() const { return kind_; }
  std::string literal() const;

  // The i-th term, 1-based.
  long value(int i) const;
  std::vector<long> prefix(int count) const;

  // True when every term is a multiple of 3.
  bool all_multiples_of_3() const;

 private:
  Kind kind_ = Kind::multiples;
  long coeff_ = 1;                 // multiples
  long offset_ = 1;                // offset
  std::vector<long> prefix_vals_;  // explicit_prefix
  long stride_ = 1;                // explicit_prefix
};

// A named family of infinite sequences together with a finite truncation.
// The generators are the sequence forms of the distinguished members; the
// truncation is the finite tuple algebra the certifier works on.
struct WitnessFamily {
  std::string label;
  FiniteSemigroup base{FiniteSemigroup::from_parts({"e"}, {0})};
  std::vector<EpSeq> generators;
  TupleAlgebra truncation{
      TupleAlgebra::make(FiniteSemigroup::from_parts({"e"}, {0}), 1, {{0}})};
  std::string certificate_hint;
  nlohmann::ordered_json params;
};

// A sequence strictly between two comparable ones, over a two-element
// semilattice base. Both inputs must be purely periodic (no preperiod,
// kind "recurring"), over the same base (kind "base-mismatch"), which must
// be a two-element semilattice (kind "base"), with lo strictly below hi
// pointwise (kind "order"). The result doubles the aligned period: first
// half lo's window, second half lo's window with the first position where
// the operands differ raised to hi's value.
EpSeq between(const EpSeq& lo, const EpSeq& hi);

// A strictly increasing chain of k sequences over a two-element
// semilattice, from the constant bottom to the constant top, built by
// repeated insertion into the widest remaining gap.
std::vector<EpSeq> build_chain(const FiniteSemigroup& base2, int k);

// Truncates each sequence to the given arity. Fails with kind "arity"
// when two distinct sequences collapse to the same tuple.
std::vector<Tuple> truncate_seqs(const std::vector<EpSeq>& seqs, int arity);

// Reinterprets a sequence over a two-element semilattice inside a larger
// base: the base's bottom maps to zero_img, the other element to one_img.
EpSeq embed_binary(const EpSeq& p, const FiniteSemigroup& s, int zero_img, int one_img);

// The given tuples together with every constant tuple over the base.
TupleAlgebra adjoin_diagonal(const FiniteSemigroup& s, int arity, std::vector<Tuple> tuples);

// All tuples over s whose coordinatewise image under the component map
// (each element to the idempotent of its archimedean component) lands in
// u. The base of u must equal the idempotent semilattice of s (kind
// "base-mismatch"); the expansion is capped (kind "size-cap").
TupleAlgebra idempotent_preimage(const FiniteSemigroup& s, const TupleAlgebra& u,
                                 std::size_t size_cap = kDefaultSizeCap);

// Chain family: an embedded strict chain of the given length, plus the
// diagonal, truncated to the given arity.
WitnessFamily tilde_family(const FiniteSemigroup& s, int chain_len, int arity);

// Preimage family: the component-map preimage of a semilattice tuple
// algebra, packaged with its defining data.
WitnessFamily hat_family(const FiniteSemigroup& s, const TupleAlgebra& u,
                         std::size_t size_cap = kDefaultSizeCap);

// Witness pair for the nilpotent construction: x spans the last nonzero
// power layer, y reaches x from the preceding layer (x = product of
// word). Fails with kind "precondition" unless the input is commutative
// with a zero and nilpotency class at least 3.
struct XYWitness {
  int x = 0;
  int y = 0;
  std::vector<int> word;
};

XYWitness choose_xy(const FiniteSemigroup& s);

// Nilpotent family T over a commutative nilpotent base of class >= 3.
// Members of the truncation at arity n:
//   the zero tuple;
//   s(i,u) for 1 <= i <= n and nonzero u: u at position i, zero elsewhere;
//   c(i,j) for i <= index_count, j <= m_i: y at position i, x at i + j.
// Requires every m_i divisible by 3 (kind "m-spec") and
// n >= index_count + m_{index_count} (kind "arity").
WitnessFamily t_m(const FiniteSemigroup& s, const MSpec& m, int index_count, int arity);

// Witness triple for the group-extension construction: x outside the
// kernel group, its kernel shadow ex, and a nonidentity group element.
// Fails with kind "precondition" unless the input is commutative with one
// idempotent, nontrivial kernel group, and null quotient.
struct XGWitness {
  int x = 0;
  int x_under = 0;
  int g = 0;
};

XGWitness choose_xg(const FiniteSemigroup& s);

// Group-extension family W over a base with nontrivial kernel group G and
// null quotient. Members of the truncation at arity n: the full block of
// kernel tuples, the diagonal, and
//   u(p,q) for 1 <= p <= p_count, 1 <= q <= m_p:
//   e at positions below p, g at p, x at the next q positions, ex after.
// Requires m_1 > |S| (kind "m-spec") and n >= p_count + m_{p_count}
// (kind "arity").
WitnessFamily w_m(const FiniteSemigroup& s, const MSpec& m, int p_count, int arity,
                  std::size_t size_cap = kDefaultSizeCap);

}  // namespace sdpt
