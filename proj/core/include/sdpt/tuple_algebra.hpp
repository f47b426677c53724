#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdpt/semigroup.hpp"

namespace sdpt {

// A tuple over a base semigroup, one base element index per coordinate.
using Tuple = std::vector<int>;

// Rank of a tuple among all base^arity tuples. Coordinate 0 is the least
// significant digit, matching direct_power's element numbering.
std::uint64_t colex_rank(const Tuple& t, int base_order);
Tuple colex_unrank(std::uint64_t rank, int base_order, int arity);

// A finite set of equal-length tuples over a shared base, with the
// componentwise product. The member list is kept sorted (colex order) and
// duplicate-free; closure under the product and coordinatewise surjectivity
// are computed once on construction.
class TupleAlgebra {
 public:
  static TupleAlgebra make(FiniteSemigroup base, int arity, std::vector<Tuple> members);

  const FiniteSemigroup& base() const { return base_; }
  int arity() const { return arity_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<Tuple>& members() const { return members_; }
  const Tuple& member(int k) const { return members_[static_cast<std::size_t>(k)]; }

  // Index of a tuple in the member list, or -1 when absent.
  int member_index(const Tuple& t) const;

  bool closed() const { return closed_; }
  // Coordinates whose projection hits every base element.
  const std::vector<bool>& surjective_coords() const { return surjective_coords_; }

  // Componentwise product of members i and j as a tuple (always defined,
  // even when the result is not itself a member).
  Tuple product_tuple(int i, int j) const;
  // Member index of that product; fails with kind "not-closed" if absent.
  int product(int i, int j) const;

  // Printable form "(a,b,...)" using base element names.
  std::string member_name(int k) const;

  // The members as an abstract semigroup. Fails with kind "not-closed"
  // when some pairwise product escapes the set.
  FiniteSemigroup to_semigroup() const;

  bool operator==(const TupleAlgebra&) const = default;

 private:
  TupleAlgebra() = default;
  FiniteSemigroup base_{FiniteSemigroup::from_parts({"e"}, {0})};
  int arity_ = 1;
  std::vector<Tuple> members_;
  bool closed_ = false;
  std::vector<bool> surjective_coords_;
};

// True when the algebra is a subdirect product: closed, and every coordinate
// projection is onto. Fails with kind "not-closed" when the set is not even
// a subsemigroup, since the question only makes sense for one.
bool is_subdirect(const TupleAlgebra& t);

}  // namespace sdpt
