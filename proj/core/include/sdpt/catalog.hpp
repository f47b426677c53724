#pragma once

#include <string>
#include <vector>

#include "sdpt/semigroup.hpp"

namespace sdpt::catalog {

// Names of the built-in examples, in listing order.
std::vector<std::string> names();

// A built-in example by name. Fails with kind "catalog" for unknown names.
FiniteSemigroup get(const std::string& name);

// Same, but a file <dir>/<name>.json takes precedence when present.
FiniteSemigroup get(const std::string& name, const std::string& dir);

// Parametric families. All fail with kind "params" on out-of-range sizes.
FiniteSemigroup cyclic(int m);
FiniteSemigroup null_semigroup(int n);
FiniteSemigroup chain_semilattice(int k);
FiniteSemigroup monogenic_nilpotent(int k);
FiniteSemigroup rectangular_band(int rows, int cols);
FiniteSemigroup cyclic_by_null_extension(int m, int r);

}  // namespace sdpt::catalog
