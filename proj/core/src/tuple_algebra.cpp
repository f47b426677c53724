#include "sdpt/tuple_algebra.hpp"

#include <algorithm>

#include "sdpt/error.hpp"

namespace sdpt {

namespace {

// Colex comparison: compare the most significant (last) coordinate first.
bool colex_less(const Tuple& a, const Tuple& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::uint64_t colex_rank(const Tuple& t, int base_order) {
  std::uint64_t r = 0;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    r = r * static_cast<std::uint64_t>(base_order) + static_cast<std::uint64_t>(*it);
  }
  return r;
}

Tuple colex_unrank(std::uint64_t rank, int base_order, int arity) {
  Tuple t(static_cast<std::size_t>(arity));
  for (int c = 0; c < arity; ++c) {
    t[static_cast<std::size_t>(c)] = static_cast<int>(rank % static_cast<std::uint64_t>(base_order));
    rank /= static_cast<std::uint64_t>(base_order);
  }
  return t;
}

TupleAlgebra TupleAlgebra::make(FiniteSemigroup base, int arity, std::vector<Tuple> members) {
  if (arity < 1) fail("params", "arity must be at least 1");
  if (members.empty()) fail("shape", "empty member list");
  for (const auto& t : members) {
    if (static_cast<int>(t.size()) != arity) fail("shape", "tuple length does not match the arity");
    for (int c : t) {
      if (c < 0 || c >= base.size()) fail("index-range", "tuple coordinate out of range");
    }
  }
  std::sort(members.begin(), members.end(), colex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());

  TupleAlgebra alg;
  alg.base_ = std::move(base);
  alg.arity_ = arity;
  alg.members_ = std::move(members);

  alg.closed_ = true;
  const int n = alg.size();
  for (int i = 0; i < n && alg.closed_; ++i)
    for (int j = 0; j < n; ++j) {
      if (alg.member_index(alg.product_tuple(i, j)) < 0) {
        alg.closed_ = false;
        break;
      }
    }

  alg.surjective_coords_.assign(static_cast<std::size_t>(arity), false);
  for (int c = 0; c < arity; ++c) {
    std::vector<bool> hit(static_cast<std::size_t>(alg.base_.size()), false);
    int count = 0;
    for (const auto& t : alg.members_) {
      const int v = t[static_cast<std::size_t>(c)];
      if (!hit[static_cast<std::size_t>(v)]) {
        hit[static_cast<std::size_t>(v)] = true;
        ++count;
      }
    }
    alg.surjective_coords_[static_cast<std::size_t>(c)] = count == alg.base_.size();
  }
  return alg;
}

int TupleAlgebra::member_index(const Tuple& t) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), t, colex_less);
  if (it != members_.end() && *it == t) return static_cast<int>(it - members_.begin());
  return -1;
}

Tuple TupleAlgebra::product_tuple(int i, int j) const {
  const Tuple& a = members_[static_cast<std::size_t>(i)];
  const Tuple& b = members_[static_cast<std::size_t>(j)];
  Tuple r(static_cast<std::size_t>(arity_));
  for (int c = 0; c < arity_; ++c) {
    r[static_cast<std::size_t>(c)] =
        base_.product(a[static_cast<std::size_t>(c)], b[static_cast<std::size_t>(c)]);
  }
  return r;
}

int TupleAlgebra::product(int i, int j) const {
  const int k = member_index(product_tuple(i, j));
  if (k < 0) {
    fail("not-closed", "product " + member_name(i) + " * " + member_name(j) +
                           " is not in the member list");
  }
  return k;
}

std::string TupleAlgebra::member_name(int k) const {
  const Tuple& t = members_[static_cast<std::size_t>(k)];
  std::string name = "(";
  for (int c = 0; c < arity_; ++c) {
    if (c) name += ",";
    name += base_.name(t[static_cast<std::size_t>(c)]);
  }
  name += ")";
  return name;
}

FiniteSemigroup TupleAlgebra::to_semigroup() const {
  const int n = size();
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) names[static_cast<std::size_t>(k)] = member_name(k);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = product(i, j);
  return FiniteSemigroup::from_parts(std::move(names), std::move(table));
}

bool is_subdirect(const TupleAlgebra& t) {
  if (!t.closed()) fail("not-closed", "the member set is not closed under the product");
  const auto& s = t.surjective_coords();
  return std::find(s.begin(), s.end(), false) == s.end();
}

}  // namespace sdpt
