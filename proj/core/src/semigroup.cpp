#include "sdpt/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sdpt/error.hpp"

namespace sdpt {

namespace {

void check_shape(const std::vector<std::string>& names, const std::vector<int>& table) {
  if (names.empty()) fail("shape", "element list is empty");
  const std::size_t n = names.size();
  if (table.size() != n * n) {
    fail("shape", "table has " + std::to_string(table.size()) + " entries, expected " +
                      std::to_string(n * n));
  }
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) fail("syntax", "empty element name");
    if (!seen.insert(name).second) fail("syntax", "duplicate element name '" + name + "'");
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] < 0 || table[k] >= static_cast<int>(n)) {
      fail("index-range", "table entry " + std::to_string(table[k]) + " at row " +
                              std::to_string(k / n) + ", column " + std::to_string(k % n) +
                              " is outside 0.." + std::to_string(n - 1));
    }
  }
}

void check_associative(const std::vector<std::string>& names, const std::vector<int>& table) {
  const int n = static_cast<int>(names.size());
  auto at = [&](int i, int j) { return table[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ij = at(i, j);
      for (int k = 0; k < n; ++k) {
        if (at(ij, k) != at(i, at(j, k))) {
          fail("associativity", "first failing triple (" + names[i] + ", " + names[j] + ", " +
                                    names[k] + ") at indices (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ", " + std::to_string(k) + ")");
        }
      }
    }
}

bool default_decimal_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] != std::to_string(i)) return false;
  }
  return true;
}

}  // namespace

FiniteSemigroup FiniteSemigroup::checked(std::vector<std::string> names, std::vector<int> table) {
  check_shape(names, table);
  check_associative(names, table);
  FiniteSemigroup s;
  s.n_ = static_cast<int>(names.size());
  s.names_ = std::move(names);
  s.table_ = std::move(table);
  return s;
}

FiniteSemigroup FiniteSemigroup::from_parts(std::vector<std::string> names,
                                            std::vector<int> table) {
  check_shape(names, table);
  FiniteSemigroup s;
  s.n_ = static_cast<int>(names.size());
  s.names_ = std::move(names);
  s.table_ = std::move(table);
  return s;
}

int FiniteSemigroup::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  }
  fail("unknown-name", "no element named '" + name + "'");
}

void FiniteSemigroup::validate() const {
  check_shape(names_, table_);
  check_associative(names_, table_);
}

bool is_commutative(const FiniteSemigroup& s) {
  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.product(i, j) != s.product(j, i)) return false;
  return true;
}

std::optional<int> zero_element(const FiniteSemigroup& s) {
  const int n = s.size();
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int i = 0; i < n && absorbing; ++i) {
      absorbing = s.product(z, i) == z && s.product(i, z) == z;
    }
    if (absorbing) return z;
  }
  return std::nullopt;
}

bool is_group(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) seen[static_cast<std::size_t>(s.product(i, j))] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) seen[static_cast<std::size_t>(s.product(j, i))] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

int word_product(const FiniteSemigroup& s, const std::vector<int>& word) {
  if (word.empty()) fail("params", "empty word has no product");
  int acc = word[0];
  for (std::size_t k = 1; k < word.size(); ++k) acc = s.product(acc, word[k]);
  return acc;
}

std::pair<int, int> monogenic_index_period(const FiniteSemigroup& s, int elem) {
  if (elem < 0 || elem >= s.size()) fail("index-range", "element index out of range");
  auto step = [&](int u) { return s.product(u, elem); };
  // Floyd cycle detection on the power sequence s, s^2, s^3, ...
  int tortoise = step(elem);
  int hare = step(step(elem));
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(step(hare));
  }
  int mu = 0;
  tortoise = elem;
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  int lambda = 1;
  hare = step(tortoise);
  while (tortoise != hare) {
    hare = step(hare);
    ++lambda;
  }
  return {mu + 1, lambda};
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const std::vector<int>& subset) {
  if (subset.empty()) fail("shape", "empty subset");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> pos(static_cast<std::size_t>(s.size()), -1);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 0 || sorted[k] >= s.size()) fail("index-range", "subset index out of range");
    pos[static_cast<std::size_t>(sorted[k])] = static_cast<int>(k);
  }
  const int m = static_cast<int>(sorted.size());
  std::vector<std::string> names;
  names.reserve(sorted.size());
  for (int e : sorted) names.push_back(s.name(e));
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = s.product(sorted[static_cast<std::size_t>(i)], sorted[static_cast<std::size_t>(j)]);
      if (pos[static_cast<std::size_t>(p)] < 0) {
        fail("not-closed", "subset is not closed: " + s.name(sorted[static_cast<std::size_t>(i)]) +
                               " * " + s.name(sorted[static_cast<std::size_t>(j)]) + " = " +
                               s.name(p) + " is outside it");
      }
      table[static_cast<std::size_t>(i) * m + j] = pos[static_cast<std::size_t>(p)];
    }
  return FiniteSemigroup::from_parts(std::move(names), std::move(table));
}

std::vector<int> closure(const FiniteSemigroup& s, const std::vector<int>& seed) {
  std::vector<bool> in(static_cast<std::size_t>(s.size()), false);
  std::vector<int> work;
  for (int e : seed) {
    if (e < 0 || e >= s.size()) fail("index-range", "seed index out of range");
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = true;
      work.push_back(e);
    }
  }
  if (work.empty()) fail("shape", "empty seed");
  std::vector<int> members = work;
  while (!work.empty()) {
    const int a = work.back();
    work.pop_back();
    for (int b : members) {
      for (int p : {s.product(a, b), s.product(b, a)}) {
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = true;
          work.push_back(p);
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b,
                               std::size_t size_cap) {
  const std::size_t n = static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size());
  if (n > size_cap) {
    fail("size-cap", "direct product has " + std::to_string(n) + " elements, cap is " +
                         std::to_string(size_cap));
  }
  // Pair (i, j) sits at index i + j*|A|: the first coordinate varies fastest.
  std::vector<std::string> names(n);
  for (int j = 0; j < b.size(); ++j)
    for (int i = 0; i < a.size(); ++i)
      names[static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * a.size()] =
          "(" + a.name(i) + "," + b.name(j) + ")";
  std::vector<int> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const int ui = static_cast<int>(u % a.size());
    const int uj = static_cast<int>(u / a.size());
    for (std::size_t v = 0; v < n; ++v) {
      const int vi = static_cast<int>(v % a.size());
      const int vj = static_cast<int>(v / a.size());
      table[u * n + v] = a.product(ui, vi) +
                         b.product(uj, vj) * a.size();
    }
  }
  return FiniteSemigroup::from_parts(std::move(names), std::move(table));
}

FiniteSemigroup direct_power(const FiniteSemigroup& s, int arity, std::size_t size_cap) {
  if (arity < 1) fail("params", "arity must be at least 1");
  const std::size_t base = static_cast<std::size_t>(s.size());
  std::size_t n = 1;
  for (int c = 0; c < arity; ++c) {
    if (n > size_cap / base + 1) fail("size-cap", "direct power exceeds the size cap");
    n *= base;
    if (n > size_cap) {
      fail("size-cap", "direct power has " + std::to_string(n) + " elements, cap is " +
                           std::to_string(size_cap));
    }
  }
  auto digits = [&](std::size_t r) {
    std::vector<int> t(static_cast<std::size_t>(arity));
    for (int c = 0; c < arity; ++c) {
      t[static_cast<std::size_t>(c)] = static_cast<int>(r % base);
      r /= base;
    }
    return t;
  };
  std::vector<std::string> names(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto t = digits(r);
    std::string name = "(";
    for (int c = 0; c < arity; ++c) {
      if (c) name += ",";
      name += s.name(t[static_cast<std::size_t>(c)]);
    }
    name += ")";
    names[r] = std::move(name);
  }
  std::vector<int> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto tu = digits(u);
    for (std::size_t v = 0; v < n; ++v) {
      const auto tv = digits(v);
      std::size_t r = 0;
      std::size_t mult = 1;
      for (int c = 0; c < arity; ++c) {
        r += static_cast<std::size_t>(
                 s.product(tu[static_cast<std::size_t>(c)], tv[static_cast<std::size_t>(c)])) *
             mult;
        mult *= base;
      }
      table[u * n + v] = static_cast<int>(r);
    }
  }
  return FiniteSemigroup::from_parts(std::move(names), std::move(table));
}

FiniteSemigroup relabel(const FiniteSemigroup& s, const std::vector<int>& perm) {
  const int n = s.size();
  if (static_cast<int>(perm.size()) != n) fail("params", "permutation size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) fail("params", "not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  std::vector<std::string> names(static_cast<std::size_t>(n));
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = s.name(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * n +
            perm[static_cast<std::size_t>(j)]] =
          perm[static_cast<std::size_t>(s.product(i, j))];
  return FiniteSemigroup::from_parts(std::move(names), std::move(table));
}

Fingerprint fingerprint(const FiniteSemigroup& s) {
  const int n = s.size();
  Fingerprint fp;
  fp.order = n;
  std::vector<ElementProfile> profiles(static_cast<std::size_t>(n));
  // divides[t][x] : x lies in tS.
  std::vector<std::vector<bool>> divides(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u) divides[static_cast<std::size_t>(t)][static_cast<std::size_t>(s.product(t, u))] = true;
  for (int e = 0; e < n; ++e) {
    auto& p = profiles[static_cast<std::size_t>(e)];
    p.idempotent = s.product(e, e) == e;
    if (p.idempotent) ++fp.idempotent_count;
    std::tie(p.index, p.period) = monogenic_index_period(s, e);
    int div = 0;
    for (int t = 0; t < n; ++t) div += divides[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] ? 1 : 0;
    p.divisor_count = div;
    int out = 0;
    for (int x = 0; x < n; ++x) out += divides[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] ? 1 : 0;
    p.divides_count = out;
  }
  fp.profile_multiset = profiles;
  std::sort(fp.profile_multiset.begin(), fp.profile_multiset.end());
  std::vector<ElementProfile> distinct = fp.profile_multiset;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  fp.profile_class.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), profiles[static_cast<std::size_t>(e)]);
    fp.profile_class[static_cast<std::size_t>(e)] = static_cast<int>(it - distinct.begin());
  }
  return fp;
}

namespace {

FiniteSemigroup parse_json_doc(const std::string& doc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(doc);
  } catch (const nlohmann::json::parse_error& e) {
    fail("syntax", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("table")) {
    fail("syntax", "expected an object with 'elements' and 'table'");
  }
  std::vector<std::string> names;
  if (!j["elements"].is_array()) fail("syntax", "'elements' must be an array of names");
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail("syntax", "'elements' must be an array of names");
    names.push_back(e.get<std::string>());
  }
  const std::size_t n = names.size();
  if (!j["table"].is_array() || j["table"].size() != n) {
    fail("shape", "'table' must have one row per element");
  }
  std::vector<int> table;
  table.reserve(n * n);
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != n) fail("shape", "table rows must have one entry per element");
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) fail("syntax", "table entries must be integers");
      table.push_back(cell.get<int>());
    }
  }
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

FiniteSemigroup parse_text_doc(const std::string& doc) {
  std::istringstream in(doc);
  std::string line;
  std::vector<std::string> names;
  std::vector<std::vector<int>> rows;
  long expected = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (tok == "#") {
      std::string key;
      if (ls >> key && key == "names:") {
        names.clear();
        std::string nm;
        while (ls >> nm) names.push_back(nm);
      }
      continue;
    }
    if (tok.front() == '#') continue;
    if (expected < 0) {
      try {
        expected = std::stol(tok);
      } catch (...) {
        fail("syntax", "expected the element count on the first data line");
      }
      if (expected < 1) fail("shape", "element count must be positive");
      std::string extra;
      if (ls >> extra) fail("syntax", "unexpected token after the element count");
      continue;
    }
    std::vector<int> row;
    try {
      row.push_back(std::stoi(tok));
      while (ls >> tok) row.push_back(std::stoi(tok));
    } catch (...) {
      fail("syntax", "table rows must contain integers");
    }
    rows.push_back(std::move(row));
  }
  if (expected < 0) fail("syntax", "empty document");
  if (static_cast<long>(rows.size()) != expected) {
    fail("shape", "expected " + std::to_string(expected) + " table rows, found " +
                      std::to_string(rows.size()));
  }
  std::vector<int> table;
  for (const auto& row : rows) {
    if (static_cast<long>(row.size()) != expected) fail("shape", "table is not square");
    table.insert(table.end(), row.begin(), row.end());
  }
  if (names.empty()) {
    for (long i = 0; i < expected; ++i) names.push_back(std::to_string(i));
  } else if (static_cast<long>(names.size()) != expected) {
    fail("shape", "names line has " + std::to_string(names.size()) + " entries, expected " +
                      std::to_string(expected));
  }
  return FiniteSemigroup::checked(std::move(names), std::move(table));
}

}  // namespace

FiniteSemigroup parse_semigroup(const std::string& doc) {
  for (char c : doc) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_doc(doc);
    return parse_text_doc(doc);
  }
  fail("syntax", "empty document");
}

std::string to_json_doc(const FiniteSemigroup& s) {
  nlohmann::ordered_json j;
  j["elements"] = s.names();
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (int i = 0; i < s.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < s.size(); ++k) row.push_back(s.product(i, k));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j.dump(2) + "\n";
}

std::string to_text_doc(const FiniteSemigroup& s) {
  for (const auto& name : s.names()) {
    for (char c : name) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
        fail("io", "element name '" + name + "' cannot be written in the text format");
      }
    }
  }
  std::ostringstream out;
  out << s.size() << "\n";
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (j) out << ' ';
      out << s.product(i, j);
    }
    out << "\n";
  }
  if (!default_decimal_names(s.names())) {
    out << "# names:";
    for (const auto& name : s.names()) out << ' ' << name;
    out << "\n";
  }
  return out.str();
}

}  // namespace sdpt
