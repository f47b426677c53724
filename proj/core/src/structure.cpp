#include "sdpt/structure.hpp"

#include <algorithm>
#include <numeric>

#include "sdpt/error.hpp"

namespace sdpt {

namespace {

// mask[t][x] : x lies in {t} union tS, i.e. t divides x on the left.
std::vector<std::vector<bool>> divisibility(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n),
                                   std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int t = 0; t < n; ++t) {
    m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = true;
    for (int u = 0; u < n; ++u) {
      m[static_cast<std::size_t>(t)][static_cast<std::size_t>(s.product(t, u))] = true;
    }
  }
  return m;
}

std::vector<bool> power_set(const FiniteSemigroup& s, int e) {
  std::vector<bool> in(static_cast<std::size_t>(s.size()), false);
  int u = e;
  while (!in[static_cast<std::size_t>(u)]) {
    in[static_cast<std::size_t>(u)] = true;
    u = s.product(u, e);
  }
  return in;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
};

}  // namespace

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e) {
    if (s.product(e, e) == e) out.push_back(e);
  }
  return out;
}

bool is_band(const FiniteSemigroup& s) {
  for (int e = 0; e < s.size(); ++e) {
    if (s.product(e, e) != e) return false;
  }
  return true;
}

bool is_semilattice(const FiniteSemigroup& s) { return is_band(s) && is_commutative(s); }

ArchimedeanDecomposition archimedean(const FiniteSemigroup& s) {
  if (!is_commutative(s)) fail("non-commutative", "archimedean components need a commutative input");
  const int n = s.size();
  const auto div = divisibility(s);
  std::vector<std::vector<bool>> powers;
  powers.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) powers.push_back(power_set(s, e));

  auto eventually_divides = [&](int t, int e) {
    // some power of e lies in {t} union tS
    for (int x = 0; x < n; ++x) {
      if (powers[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] &&
          div[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)]) {
        return true;
      }
    }
    return false;
  };

  UnionFind uf(n);
  for (int e = 0; e < n; ++e)
    for (int t = e + 1; t < n; ++t) {
      if (eventually_divides(t, e) && eventually_divides(e, t)) uf.unite(e, t);
    }

  ArchimedeanDecomposition dec;
  dec.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> root_to_comp(static_cast<std::size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    const int r = uf.find(e);
    if (root_to_comp[static_cast<std::size_t>(r)] < 0) {
      root_to_comp[static_cast<std::size_t>(r)] = static_cast<int>(dec.components.size());
      dec.components.emplace_back();
    }
    const int c = root_to_comp[static_cast<std::size_t>(r)];
    dec.component_of[static_cast<std::size_t>(e)] = c;
    dec.components[static_cast<std::size_t>(c)].push_back(e);
  }

  dec.idempotent_of_component.assign(dec.components.size(), -1);
  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    for (int e : dec.components[c]) {
      if (s.product(e, e) == e) {
        if (dec.idempotent_of_component[c] >= 0) {
          fail("internal", "archimedean component with two idempotents");
        }
        dec.idempotent_of_component[c] = e;
      }
    }
    if (dec.idempotent_of_component[c] < 0) {
      fail("internal", "archimedean component without an idempotent");
    }
  }
  dec.phi.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    dec.phi[static_cast<std::size_t>(e)] =
        dec.idempotent_of_component[static_cast<std::size_t>(dec.component_of[static_cast<std::size_t>(e)])];
  }
  return dec;
}

namespace {

SemilatticeOrder order_of_semilattice(FiniteSemigroup base, std::vector<int> ambient) {
  const int n = base.size();
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = base.product(i, j) == i;
    }
  std::optional<int> zero;
  for (int z = 0; z < n; ++z) {
    if (std::find(leq[static_cast<std::size_t>(z)].begin(), leq[static_cast<std::size_t>(z)].end(),
                  false) == leq[static_cast<std::size_t>(z)].end()) {
      zero = z;
      break;
    }
  }
  return SemilatticeOrder{std::move(base), std::move(ambient), std::move(leq), zero};
}

}  // namespace

SemilatticeOrder semilattice_order(const FiniteSemigroup& s) {
  if (!is_semilattice(s)) fail("not-semilattice", "input is not a commutative band");
  std::vector<int> ambient(static_cast<std::size_t>(s.size()));
  std::iota(ambient.begin(), ambient.end(), 0);
  return order_of_semilattice(s, std::move(ambient));
}

SemilatticeOrder idempotent_semilattice(const FiniteSemigroup& s) {
  if (!is_commutative(s)) {
    fail("non-commutative", "the idempotent semilattice needs a commutative input");
  }
  std::vector<int> e = idempotents(s);
  FiniteSemigroup sub = subsemigroup(s, e);
  return order_of_semilattice(std::move(sub), std::move(e));
}

MinimalIdeal minimal_ideal(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<bool> in(static_cast<std::size_t>(n), true);
  std::vector<bool> principal(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    std::fill(principal.begin(), principal.end(), false);
    principal[static_cast<std::size_t>(t)] = true;
    for (int u = 0; u < n; ++u) {
      principal[static_cast<std::size_t>(s.product(t, u))] = true;
      principal[static_cast<std::size_t>(s.product(u, t))] = true;
      for (int v = 0; v < n; ++v) {
        principal[static_cast<std::size_t>(s.product(s.product(u, t), v))] = true;
      }
    }
    for (int x = 0; x < n; ++x) {
      if (!principal[static_cast<std::size_t>(x)]) in[static_cast<std::size_t>(x)] = false;
    }
  }
  MinimalIdeal k;
  for (int x = 0; x < n; ++x) {
    if (in[static_cast<std::size_t>(x)]) k.members.push_back(x);
  }
  // Group test: a*K = K = K*a for every member a.
  k.group = !k.members.empty();
  std::vector<bool> image(static_cast<std::size_t>(n));
  for (int a : k.members) {
    if (!k.group) break;
    for (int side = 0; side < 2; ++side) {
      std::fill(image.begin(), image.end(), false);
      std::size_t count = 0;
      for (int b : k.members) {
        const int p = side == 0 ? s.product(a, b) : s.product(b, a);
        if (!image[static_cast<std::size_t>(p)]) {
          image[static_cast<std::size_t>(p)] = true;
          ++count;
        }
      }
      if (count != k.members.size()) {
        k.group = false;
        break;
      }
    }
  }
  return k;
}

std::optional<int> nilpotency_class(const FiniteSemigroup& s) {
  const auto zero = zero_element(s);
  if (!zero) return std::nullopt;
  const int n = s.size();
  std::vector<bool> current(static_cast<std::size_t>(n), true);  // S^1
  int k = 1;
  while (true) {
    std::size_t count = 0;
    for (int x = 0; x < n; ++x) count += current[static_cast<std::size_t>(x)] ? 1 : 0;
    if (count == 1 && current[static_cast<std::size_t>(*zero)]) return k;
    std::vector<bool> next(static_cast<std::size_t>(n), false);
    std::size_t next_count = 0;
    for (int x = 0; x < n; ++x) {
      if (!current[static_cast<std::size_t>(x)]) continue;
      for (int y = 0; y < n; ++y) {
        const int p = s.product(x, y);
        if (!next[static_cast<std::size_t>(p)]) {
          next[static_cast<std::size_t>(p)] = true;
          ++next_count;
        }
      }
    }
    if (next_count == count) return std::nullopt;  // stabilized above {zero}
    current = std::move(next);
    ++k;
  }
}

FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const std::vector<int>& ideal) {
  const int n = s.size();
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int e : ideal) {
    if (e < 0 || e >= n) fail("index-range", "ideal index out of range");
    in[static_cast<std::size_t>(e)] = true;
  }
  if (ideal.empty()) fail("not-ideal", "an ideal cannot be empty");
  for (int e = 0; e < n; ++e) {
    if (!in[static_cast<std::size_t>(e)]) continue;
    for (int x = 0; x < n; ++x) {
      if (!in[static_cast<std::size_t>(s.product(e, x))] || !in[static_cast<std::size_t>(s.product(x, e))]) {
        fail("not-ideal", "the subset is not a two-sided ideal (element " + s.name(e) +
                              " times " + s.name(x) + " escapes)");
      }
    }
  }
  std::vector<int> cls(static_cast<std::size_t>(n));
  std::vector<std::string> names;
  std::string zero_name = "0";
  bool taken = true;
  while (taken) {
    taken = false;
    for (int x = 0; x < n; ++x) {
      if (!in[static_cast<std::size_t>(x)] && s.name(x) == zero_name) {
        zero_name += "_";
        taken = true;
        break;
      }
    }
  }
  names.push_back(zero_name);
  for (int x = 0; x < n; ++x) {
    if (in[static_cast<std::size_t>(x)]) {
      cls[static_cast<std::size_t>(x)] = 0;
    } else {
      cls[static_cast<std::size_t>(x)] = static_cast<int>(names.size());
      names.push_back(s.name(x));
    }
  }
  const int m = static_cast<int>(names.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m, 0);
  for (int x = 0; x < n; ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    for (int y = 0; y < n; ++y) {
      if (in[static_cast<std::size_t>(y)]) continue;
      table[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)]) * m +
            cls[static_cast<std::size_t>(y)]] = cls[static_cast<std::size_t>(s.product(x, y))];
    }
  }
  return FiniteSemigroup::from_parts(std::move(names), std::move(table));
}

ExtensionDecomposition extension_decomposition(const FiniteSemigroup& s) {
  if (!is_commutative(s) || idempotents(s).size() != 1) {
    fail("precondition", "needs a commutative semigroup with exactly one idempotent");
  }
  MinimalIdeal k = minimal_ideal(s);
  if (!k.group) fail("internal", "kernel of a one-idempotent commutative semigroup must be a group");
  ExtensionDecomposition dec{subsemigroup(s, k.members), k.members, rees_quotient(s, k.members)};
  dec.group_trivial = dec.group.size() == 1;
  dec.quotient_trivial = dec.quotient.size() == 1;
  dec.quotient_class = nilpotency_class(dec.quotient);
  return dec;
}

std::optional<std::pair<int, int>> rectangular_band_dimensions(const FiniteSemigroup& s) {
  const int n = s.size();
  if (!is_band(s)) return std::nullopt;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (s.product(s.product(x, y), z) != s.product(x, z)) return std::nullopt;
      }
  // x and y share a row exactly when x*y = y.
  std::vector<int> row(static_cast<std::size_t>(n), -1);
  int rows = 0;
  for (int x = 0; x < n; ++x) {
    if (row[static_cast<std::size_t>(x)] >= 0) continue;
    row[static_cast<std::size_t>(x)] = rows;
    for (int y = x + 1; y < n; ++y) {
      if (s.product(x, y) == y) row[static_cast<std::size_t>(y)] = rows;
    }
    ++rows;
  }
  return std::make_pair(rows, n / rows);
}

std::vector<int> principal_ideal(const SemilatticeOrder& order, int e) {
  std::vector<int> out;
  for (int f = 0; f < order.base.size(); ++f) {
    if (order.leq[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)]) out.push_back(f);
  }
  return out;
}

std::vector<int> principal_filter(const SemilatticeOrder& order, int e) {
  std::vector<int> out;
  for (int f = 0; f < order.base.size(); ++f) {
    if (order.leq[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)]) out.push_back(f);
  }
  return out;
}

int minimal_nonzero(const SemilatticeOrder& order) {
  if (!order.zero) fail("no-zero", "the order has no least element");
  const int n = order.base.size();
  if (n < 2) fail("trivial-semilattice", "no element lies above the zero");
  for (int e = 0; e < n; ++e) {
    if (e == *order.zero) continue;
    bool minimal = true;
    for (int f = 0; f < n && minimal; ++f) {
      if (f == e || f == *order.zero) continue;
      if (order.leq[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)]) minimal = false;
    }
    if (minimal) return e;
  }
  fail("internal", "a finite order must have a minimal nonzero element");
}

}  // namespace sdpt
