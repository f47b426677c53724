#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdpt {

inline constexpr std::size_t kDefaultSizeCap = 4096;

/// A finite semigroup given by an element list and a full multiplication
/// table. table(i, j) is the index of the product with i as the left factor.
/// Construction always verifies the table is square and closed (every entry a
/// valid index); `checked` additionally verifies associativity and reports the
/// first failing triple.
class FiniteSemigroup {
 public:
  static FiniteSemigroup checked(std::vector<std::string> names, std::vector<int> table);

  /// For tables that are associative by construction. Shape and closure are
  /// still enforced; associativity is not re-verified here.
  static FiniteSemigroup from_parts(std::vector<std::string> names, std::vector<int> table);

  int size() const { return n_; }
  int product(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& table() const { return table_; }

  int index_of(const std::string& name) const;

  /// Full re-validation: shape, closure, associativity. Throws with the first
  /// failing triple (i, j, k) on an associativity defect.
  void validate() const;

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  FiniteSemigroup() = default;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> table_;
};

bool is_commutative(const FiniteSemigroup& s);

/// The absorbing element (zs = sz = z for all s), when one exists.
std::optional<int> zero_element(const FiniteSemigroup& s);

/// Finite semigroup is a group iff every row and column of the table is a
/// permutation.
bool is_group(const FiniteSemigroup& s);

/// Product of a nonempty word of element indices, left to right.
int word_product(const FiniteSemigroup& s, const std::vector<int>& word);

/// (index, period) of the cyclic subsemigroup generated by an element:
/// index = least i >= 1 with s^i = s^{i+period}, period minimal.
std::pair<int, int> monogenic_index_period(const FiniteSemigroup& s, int elem);

/// Induced subsemigroup on a closed subset (ascending element indices).
FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const std::vector<int>& subset);

/// Least closed superset of seed, ascending.
std::vector<int> closure(const FiniteSemigroup& s, const std::vector<int>& seed);

FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b,
                               std::size_t size_cap = kDefaultSizeCap);

/// n-fold direct power. Elements are tuples named "(a,b,...)"; element k is
/// the tuple whose c-th coordinate is digit c of k written base |S| with
/// coordinate 0 least significant.
FiniteSemigroup direct_power(const FiniteSemigroup& s, int arity,
                             std::size_t size_cap = kDefaultSizeCap);

/// perm maps old index -> new index.
FiniteSemigroup relabel(const FiniteSemigroup& s, const std::vector<int>& perm);

struct ElementProfile {
  bool idempotent = false;
  int index = 0;          // monogenic index
  int period = 0;         // monogenic period
  int divisor_count = 0;  // |{t : s in tS}|
  int divides_count = 0;  // |sS|
  auto operator<=>(const ElementProfile&) const = default;
};

/// Isomorphism-invariant summary: order, idempotent count, and the sorted
/// multiset of element profiles. profile_class maps each element to the rank
/// of its profile among the distinct profiles, which the isomorphism search
/// uses to restrict candidate images.
struct Fingerprint {
  int order = 0;
  int idempotent_count = 0;
  std::vector<ElementProfile> profile_multiset;
  std::vector<int> profile_class;

  bool operator==(const Fingerprint& o) const {
    return order == o.order && idempotent_count == o.idempotent_count &&
           profile_multiset == o.profile_multiset;
  }
};

Fingerprint fingerprint(const FiniteSemigroup& s);

/// Parses a Cayley document, JSON or compact text (auto-detected).
FiniteSemigroup parse_semigroup(const std::string& doc);

/// Canonical JSON Cayley document; parse(to_json_doc(s)) reproduces s exactly.
std::string to_json_doc(const FiniteSemigroup& s);

/// Compact text form: element count, table rows, and a "# names:" line when
/// the names differ from decimal indices.
std::string to_text_doc(const FiniteSemigroup& s);

}  // namespace sdpt
