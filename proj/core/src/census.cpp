#include "sdpt/census.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "sdpt/certify.hpp"
#include "sdpt/error.hpp"
#include "sdpt/json_io.hpp"

namespace sdpt {

namespace {

std::filesystem::path cache_file(const std::string& dir, const FiniteSemigroup& base, int arity) {
  return std::filesystem::path(dir) /
         ("census-" + semigroup_hash(base) + "-a" + std::to_string(arity) + ".json");
}

bool try_load_cache(const std::filesystem::path& file, const FiniteSemigroup& base, int arity,
                    CensusResult& out) {
  std::ifstream in(file);
  if (!in) return false;
  ojson j;
  try {
    j = ojson::parse(in);
  } catch (...) {
    return false;
  }
  try {
    CensusResult cached = census_from_json(j);
    // The filename key is a hash; insist on the exact base and arity.
    if (!(cached.base == base) || cached.arity != arity) return false;
    out = std::move(cached);
    out.from_cache = true;
    return true;
  } catch (...) {
    return false;
  }
}

void store_cache(const std::filesystem::path& file, const CensusResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;  // caching is best-effort
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << census_json(result).dump(2) << "\n";
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

CensusResult enumerate_subdirect(const FiniteSemigroup& base, int arity,
                                 const CensusOptions& options) {
  if (arity < 1) fail("params", "arity must be at least 1");
  std::size_t universe = 1;
  for (int c = 0; c < arity; ++c) {
    if (universe > options.cap / static_cast<std::size_t>(base.size())) {
      fail("size-cap", "the tuple universe exceeds the cap of " + std::to_string(options.cap));
    }
    universe *= static_cast<std::size_t>(base.size());
  }
  if (universe > options.cap) {
    fail("size-cap", "the tuple universe exceeds the cap of " + std::to_string(options.cap));
  }
  if (universe > 24) {
    fail("size-cap", "a universe of " + std::to_string(universe) +
                         " tuples is beyond what subset enumeration can finish");
  }

  CensusResult result;
  result.base = base;
  result.arity = arity;

  std::filesystem::path file;
  if (!options.cache_dir.empty()) {
    file = cache_file(options.cache_dir, base, arity);
    if (try_load_cache(file, base, arity, result)) return result;
  }

  const auto started = std::chrono::steady_clock::now();
  const int n = static_cast<int>(universe);

  std::vector<Tuple> tuples;
  tuples.reserve(universe);
  for (std::size_t r = 0; r < universe; ++r) {
    tuples.push_back(colex_unrank(r, base.size(), arity));
  }
  std::vector<int> tab(universe * universe);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Tuple p(static_cast<std::size_t>(arity));
      for (int c = 0; c < arity; ++c) {
        p[static_cast<std::size_t>(c)] =
            base.product(tuples[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)],
                         tuples[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]);
      }
      tab[static_cast<std::size_t>(u) * universe + static_cast<std::size_t>(v)] =
          static_cast<int>(colex_rank(p, base.size()));
    }

  std::vector<bool> in(universe, false);
  std::vector<int> cnt(universe, 0);  // ordered pairs of members landing on each rank
  long violations = 0;                 // pairs landing outside the set
  // covered[c][v]: members whose coordinate c equals v; deficit counts zeros.
  std::vector<std::vector<int>> covered(static_cast<std::size_t>(arity),
                                        std::vector<int>(static_cast<std::size_t>(base.size()), 0));
  long deficit = static_cast<long>(arity) * base.size();
  std::size_t member_count = 0;

  auto add = [&](int k) {
    violations -= cnt[static_cast<std::size_t>(k)];
    in[static_cast<std::size_t>(k)] = true;
    ++member_count;
    for (int a = 0; a < n; ++a) {
      if (!in[static_cast<std::size_t>(a)]) continue;
      if (a == k) {
        const int p = tab[static_cast<std::size_t>(k) * universe + static_cast<std::size_t>(k)];
        ++cnt[static_cast<std::size_t>(p)];
        if (!in[static_cast<std::size_t>(p)]) ++violations;
      } else {
        const int p1 = tab[static_cast<std::size_t>(k) * universe + static_cast<std::size_t>(a)];
        ++cnt[static_cast<std::size_t>(p1)];
        if (!in[static_cast<std::size_t>(p1)]) ++violations;
        const int p2 = tab[static_cast<std::size_t>(a) * universe + static_cast<std::size_t>(k)];
        ++cnt[static_cast<std::size_t>(p2)];
        if (!in[static_cast<std::size_t>(p2)]) ++violations;
      }
    }
    for (int c = 0; c < arity; ++c) {
      auto& slot = covered[static_cast<std::size_t>(c)][static_cast<std::size_t>(
          tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)])];
      if (++slot == 1) --deficit;
    }
  };
  auto remove = [&](int k) {
    for (int a = 0; a < n; ++a) {
      if (!in[static_cast<std::size_t>(a)]) continue;
      if (a == k) {
        const int p = tab[static_cast<std::size_t>(k) * universe + static_cast<std::size_t>(k)];
        --cnt[static_cast<std::size_t>(p)];
        if (!in[static_cast<std::size_t>(p)]) --violations;
      } else {
        const int p1 = tab[static_cast<std::size_t>(k) * universe + static_cast<std::size_t>(a)];
        --cnt[static_cast<std::size_t>(p1)];
        if (!in[static_cast<std::size_t>(p1)]) --violations;
        const int p2 = tab[static_cast<std::size_t>(a) * universe + static_cast<std::size_t>(k)];
        --cnt[static_cast<std::size_t>(p2)];
        if (!in[static_cast<std::size_t>(p2)]) --violations;
      }
    }
    in[static_cast<std::size_t>(k)] = false;
    --member_count;
    violations += cnt[static_cast<std::size_t>(k)];
    for (int c = 0; c < arity; ++c) {
      auto& slot = covered[static_cast<std::size_t>(c)][static_cast<std::size_t>(
          tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)])];
      if (--slot == 0) ++deficit;
    }
  };

  const DistinguishOptions dopt{false, options.node_budget, false};
  const std::uint64_t masks = std::uint64_t{1} << universe;
  std::uint64_t gray = 0;
  for (std::uint64_t g = 1; g < masks; ++g) {
    const std::uint64_t next = g ^ (g >> 1);
    const std::uint64_t flipped = next ^ gray;
    const int k = std::countr_zero(flipped);
    if ((next >> k) & 1) {
      add(k);
    } else {
      remove(k);
    }
    gray = next;
    if (violations != 0 || member_count == 0 || deficit != 0) continue;

    std::vector<Tuple> members;
    members.reserve(member_count);
    for (int u = 0; u < n; ++u) {
      if (in[static_cast<std::size_t>(u)]) members.push_back(tuples[static_cast<std::size_t>(u)]);
    }
    TupleAlgebra candidate = TupleAlgebra::make(base, arity, std::move(members));
    ++result.total;
    bool matched = false;
    for (std::size_t i = 0; i < result.representatives.size(); ++i) {
      if (result.representatives[i].size() != candidate.size()) continue;
      const Certificate cert = distinguish(result.representatives[i], candidate, dopt);
      if (cert.verdict == "equivalent") {
        ++result.class_sizes[i];
        matched = true;
        break;
      }
      if (cert.verdict == "unknown") result.dedup_exact = false;
    }
    if (!matched) {
      result.representatives.push_back(std::move(candidate));
      result.class_sizes.push_back(1);
    }
  }

  // Deterministic output order: by size, then member lists.
  std::vector<std::size_t> order(result.representatives.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = result.representatives[a];
    const auto& rb = result.representatives[b];
    if (ra.size() != rb.size()) return ra.size() < rb.size();
    return ra.members() < rb.members();
  });
  std::vector<TupleAlgebra> reps;
  std::vector<std::uint64_t> sizes;
  for (std::size_t i : order) {
    reps.push_back(result.representatives[i]);
    sizes.push_back(result.class_sizes[i]);
  }
  result.representatives = std::move(reps);
  result.class_sizes = std::move(sizes);

  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             started)
                       .count();
  if (!options.cache_dir.empty()) store_cache(file, result);
  return result;
}

}  // namespace sdpt
