#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sdpt/semigroup.hpp"

namespace sdpt {

// Indices of the idempotents of s, ascending.
std::vector<int> idempotents(const FiniteSemigroup& s);

// True when every element satisfies e*e = e.
bool is_band(const FiniteSemigroup& s);

// True when s is a commutative band.
bool is_semilattice(const FiniteSemigroup& s);

// Decomposition of a finite commutative semigroup into its archimedean
// components: the classes of mutual eventual divisibility. Each class
// contains exactly one idempotent, and phi sends an element to the
// idempotent of its class.
struct ArchimedeanDecomposition {
  std::vector<std::vector<int>> components;  // each sorted ascending
  std::vector<int> component_of;             // element -> component index
  std::vector<int> idempotent_of_component;  // component index -> idempotent
  std::vector<int> phi;                      // element -> its component's idempotent
};

// Fails with kind "non-commutative" on non-commutative input.
ArchimedeanDecomposition archimedean(const FiniteSemigroup& s);

// The idempotents of a commutative semigroup as a semilattice in their own
// right, with base[k] naming the ambient index of element k.
struct SemilatticeOrder {
  FiniteSemigroup base;
  std::vector<int> ambient;              // semilattice index -> ambient index
  std::vector<std::vector<bool>> leq;    // leq[i][j] : i <= j, i.e. i*j = i
  std::optional<int> zero;               // least element, if any
};

// The natural order of a semilattice (s*t = s means s <= t).
// Fails with kind "not-semilattice" unless every element is idempotent
// and the operation commutes.
SemilatticeOrder semilattice_order(const FiniteSemigroup& s);

// The semilattice of idempotents of a commutative semigroup.
// Fails with kind "non-commutative" on non-commutative input.
SemilatticeOrder idempotent_semilattice(const FiniteSemigroup& s);

// Members of the minimal (two-sided) ideal, plus whether it is a group.
struct MinimalIdeal {
  std::vector<int> members;  // sorted ascending
  bool group = false;
};

MinimalIdeal minimal_ideal(const FiniteSemigroup& s);

// For a semigroup with a zero o: the least k with S^k = {o}, if one exists.
std::optional<int> nilpotency_class(const FiniteSemigroup& s);

// The quotient of s by a two-sided ideal: the ideal collapses to a zero,
// placed at index 0 under the name "0" (disambiguated if taken). Fails
// with kind "not-ideal" when the subset is not a two-sided ideal.
FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const std::vector<int>& ideal);

// For a commutative semigroup with exactly one idempotent: its kernel
// group G and the quotient S/G, with the summary flags the classifier
// reads off this shape.
struct ExtensionDecomposition {
  FiniteSemigroup group;
  std::vector<int> kernel;  // ambient indices of the kernel, sorted
  FiniteSemigroup quotient;
  bool group_trivial = false;
  bool quotient_trivial = false;
  std::optional<int> quotient_class;  // nilpotency class of the quotient
};

// Fails with kind "precondition" unless s is commutative with exactly
// one idempotent.
ExtensionDecomposition extension_decomposition(const FiniteSemigroup& s);

// If s is a rectangular band, its dimensions (rows, columns) with
// rows * columns = |s|; otherwise nullopt.
std::optional<std::pair<int, int>> rectangular_band_dimensions(const FiniteSemigroup& s);

// Order ideals of a semilattice order. Indices are semilattice-local.
std::vector<int> principal_ideal(const SemilatticeOrder& order, int e);
std::vector<int> principal_filter(const SemilatticeOrder& order, int e);

// A minimal element of the nonzero part of the order, ties broken by the
// smallest element index. Fails with kind "trivial-semilattice" when no
// nonzero element exists, and with "no-zero" when the order has no least
// element.
int minimal_nonzero(const SemilatticeOrder& order);

}  // namespace sdpt
