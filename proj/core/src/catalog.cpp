#include "sdpt/catalog.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdpt/error.hpp"

namespace sdpt::catalog {

namespace {

FiniteSemigroup symmetric3() {
  using Perm = std::array<int, 3>;
  const std::vector<std::pair<std::string, Perm>> elems = {
      {"e", {0, 1, 2}},  {"r", {1, 2, 0}},  {"r2", {2, 0, 1}},
      {"s", {1, 0, 2}},  {"rs", {0, 2, 1}}, {"r2s", {2, 1, 0}},
  };
  auto index_of = [&](const Perm& p) {
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (elems[k].second == p) return static_cast<int>(k);
    }
    fail("internal", "permutation composition left the table");
  };
  std::vector<std::string> names;
  for (const auto& [name, perm] : elems) names.push_back(name);
  std::vector<int> table;
  for (const auto& [xn, x] : elems)
    for (const auto& [yn, y] : elems) {
      Perm xy;
      for (int i = 0; i < 3; ++i) xy[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])];
      table.push_back(index_of(xy));
    }
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

FiniteSemigroup builtin(const std::string& name) {
  if (name == "T1") return FiniteSemigroup::checked({"e"}, {0});
  if (name == "L2") return FiniteSemigroup::checked({"0", "1"}, {0, 0, 0, 1});
  if (name == "SL3") {
    return FiniteSemigroup::checked({"0", "e", "1"}, {0, 0, 0, 0, 1, 1, 0, 1, 2});
  }
  if (name == "SL2N") {
    return FiniteSemigroup::checked({"0", "a", "1"}, {0, 0, 0, 0, 0, 1, 0, 1, 2});
  }
  if (name == "Z2") return cyclic(2);
  if (name == "Z3") return cyclic(3);
  if (name == "S3") return symmetric3();
  if (name == "N2") return null_semigroup(2);
  if (name == "N3") return null_semigroup(3);
  if (name == "NIL3") {
    return FiniteSemigroup::checked({"0", "x", "y"}, {0, 0, 0, 0, 2, 0, 0, 0, 0});
  }
  if (name == "GN3") return cyclic_by_null_extension(2, 1);
  if (name == "LZ2") return FiniteSemigroup::checked({"l0", "l1"}, {0, 0, 1, 1});
  if (name == "RZ2") return FiniteSemigroup::checked({"r0", "r1"}, {0, 1, 0, 1});
  if (name == "RB22") return rectangular_band(2, 2);
  if (name == "Z2xN2") return direct_product(cyclic(2), null_semigroup(2));
  fail("catalog", "unknown catalog entry '" + name + "'");
}

}  // namespace

std::vector<std::string> names() {
  return {"T1", "L2",  "SL3", "SL2N", "Z2",  "Z3",   "S3",  "N2",
          "N3", "NIL3", "GN3", "LZ2",  "RZ2", "RB22", "Z2xN2"};
}

FiniteSemigroup get(const std::string& name) { return builtin(name); }

FiniteSemigroup get(const std::string& name, const std::string& dir) {
  if (!dir.empty()) {
    const std::filesystem::path p = std::filesystem::path(dir) / (name + ".json");
    std::ifstream in(p);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      return parse_semigroup(buf.str());
    }
  }
  return builtin(name);
}

FiniteSemigroup cyclic(int m) {
  if (m < 1) fail("params", "a cyclic group needs at least one element");
  std::vector<std::string> names;
  names.push_back("e");
  if (m > 1) names.push_back("g");
  for (int i = 2; i < m; ++i) names.push_back("g" + std::to_string(i));
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<std::size_t>(i) * m + j] = (i + j) % m;
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

FiniteSemigroup null_semigroup(int n) {
  if (n < 1) fail("params", "a null semigroup needs at least one element");
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  names.push_back("0");
  for (int i = 1; i < n; ++i) {
    names.push_back(i <= 4 ? letters[i - 1] : "x" + std::to_string(i));
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

FiniteSemigroup chain_semilattice(int k) {
  if (k < 1) fail("params", "a chain needs at least one element");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = std::min(i, j);
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

FiniteSemigroup monogenic_nilpotent(int k) {
  if (k < 2) fail("params", "the nilpotency class must be at least 2");
  // Elements 0, t, t^2, ..., t^(k-1) with t^k = 0.
  std::vector<std::string> names;
  names.push_back("0");
  names.push_back("t");
  for (int i = 2; i < k; ++i) names.push_back("t" + std::to_string(i));
  std::vector<int> table(static_cast<std::size_t>(k) * k, 0);
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) {
      table[static_cast<std::size_t>(i) * k + j] = i + j < k ? i + j : 0;
    }
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

FiniteSemigroup rectangular_band(int rows, int cols) {
  if (rows < 1 || cols < 1) fail("params", "a rectangular band needs positive dimensions");
  const int n = rows * cols;
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      names[static_cast<std::size_t>(i + j * rows)] =
          "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    const int ui = u % rows;
    for (int v = 0; v < n; ++v) {
      const int vj = v / rows;
      table[static_cast<std::size_t>(u) * n + v] = ui + vj * rows;
    }
  }
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

FiniteSemigroup cyclic_by_null_extension(int m, int r) {
  if (m < 1 || r < 1) fail("params", "both parts need at least one element");
  const FiniteSemigroup g = cyclic(m);
  const int n = m + r;
  std::vector<std::string> names = g.names();
  if (r == 1) {
    names.push_back("a");
  } else {
    for (int i = 1; i <= r; ++i) names.push_back("a" + std::to_string(i));
  }
  // Group products stay as in the group; each a_i squares to the identity
  // and acts as a right/left unit absorber: a_i * h = h * a_i = h.
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p;
      if (i < m && j < m) {
        p = g.product(i, j);
      } else if (i >= m && j >= m) {
        p = 0;
      } else {
        p = i < m ? i : j;
      }
      table[static_cast<std::size_t>(i) * n + j] = p;
    }
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

}  // namespace sdpt::catalog
