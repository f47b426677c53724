#include "sdpt/certify.hpp"

#include <algorithm>

#include "sdpt/error.hpp"
#include "sdpt/structure.hpp"

namespace sdpt {

std::vector<int> divisor_counts(const FiniteSemigroup& s) {
  const int n = s.size();
  std::vector<std::vector<bool>> image(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u) {
      image[static_cast<std::size_t>(t)][static_cast<std::size_t>(s.product(t, u))] = true;
    }
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int t = 0; t < n; ++t) {
      counts[static_cast<std::size_t>(x)] +=
          image[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)] ? 1 : 0;
    }
  return counts;
}

DivisorSpectrum divisor_spectrum(const FiniteSemigroup& s) {
  const std::vector<int> counts = divisor_counts(s);
  const auto zero = zero_element(s);
  DivisorSpectrum spec;
  for (int x = 0; x < s.size(); ++x) {
    if (zero && *zero == x) {
      spec.zero_divisors = counts[static_cast<std::size_t>(x)];
    } else {
      spec.counts.push_back(counts[static_cast<std::size_t>(x)]);
    }
  }
  std::sort(spec.counts.begin(), spec.counts.end());
  return spec;
}

RootSpectrum root_spectrum(const FiniteSemigroup& s, int exponent) {
  if (exponent < 2) fail("exponent", "the exponent must be at least 2");
  const int n = s.size();
  RootSpectrum spec;
  spec.exponent = exponent;
  spec.fixed.assign(static_cast<std::size_t>(n), false);
  spec.counts.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> target(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) {
    int acc = w;
    for (int k = 1; k < exponent; ++k) acc = s.product(acc, w);
    target[static_cast<std::size_t>(w)] = acc;
    spec.fixed[static_cast<std::size_t>(w)] = acc == w;
  }
  for (int w = 0; w < n; ++w) {
    if (!spec.fixed[static_cast<std::size_t>(w)]) {
      ++spec.counts[static_cast<std::size_t>(target[static_cast<std::size_t>(w)])];
    }
  }
  return spec;
}

std::vector<int> transient_root_counts(const RootSpectrum& spec) {
  std::vector<int> out;
  for (int c : spec.counts) {
    if (c > 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> ideal_filter_profile(const FiniteSemigroup& s) {
  const SemilatticeOrder ord = semilattice_order(s);
  std::vector<std::pair<int, int>> profile;
  for (int e = 0; e < s.size(); ++e) {
    profile.emplace_back(static_cast<int>(principal_ideal(ord, e).size()),
                         static_cast<int>(principal_filter(ord, e).size()));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

namespace {

nlohmann::ordered_json divisor_payload(const DivisorSpectrum& spec) {
  nlohmann::ordered_json j;
  j["counts"] = spec.counts;
  if (spec.zero_divisors) {
    j["zero_divisors"] = *spec.zero_divisors;
  } else {
    j["zero_divisors"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json root_payload(int exponent, const std::vector<int>& counts) {
  nlohmann::ordered_json j;
  j["exponent"] = exponent;
  j["transient_root_counts"] = counts;
  return j;
}

nlohmann::ordered_json profile_payload(const std::vector<std::pair<int, int>>& profile) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [down, up] : profile) pairs.push_back({down, up});
  nlohmann::ordered_json j;
  j["ideal_filter_pairs"] = std::move(pairs);
  return j;
}

struct Ladder {
  bool log;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();

  void record(const std::string& kind, const nlohmann::ordered_json& left,
              const nlohmann::ordered_json& right, bool equal) {
    if (!log) return;
    nlohmann::ordered_json step;
    step["kind"] = kind;
    step["left"] = left;
    step["right"] = right;
    step["separates"] = !equal;
    steps.push_back(std::move(step));
  }

  Certificate finish(Certificate c) {
    if (log) c.replay = std::move(steps);
    return c;
  }
};

}  // namespace

Certificate distinguish(const TupleAlgebra& a, const TupleAlgebra& b,
                        const DistinguishOptions& options) {
  if (!options.cross_base && !(a.base() == b.base())) {
    fail("base-mismatch",
         "operands live over different bases; rerun with the cross-base option to compare anyway");
  }
  const FiniteSemigroup sa = a.to_semigroup();
  const FiniteSemigroup sb = b.to_semigroup();
  Ladder ladder{options.replay};

  {
    const DivisorSpectrum da = divisor_spectrum(sa);
    const DivisorSpectrum db = divisor_spectrum(sb);
    const auto left = divisor_payload(da);
    const auto right = divisor_payload(db);
    ladder.record("divisor-spectrum", left, right, da == db);
    if (!(da == db)) {
      return ladder.finish({"divisor-spectrum", "distinguished", left, right, {}});
    }
  }

  {
    const MinimalIdeal ka = minimal_ideal(sa);
    const MinimalIdeal kb = minimal_ideal(sb);
    if (ka.group && kb.group && ka.members.size() == kb.members.size() &&
        ka.members.size() >= 2) {
      const int exponent = static_cast<int>(ka.members.size()) + 1;
      const auto ca = transient_root_counts(root_spectrum(sa, exponent));
      const auto cb = transient_root_counts(root_spectrum(sb, exponent));
      const auto left = root_payload(exponent, ca);
      const auto right = root_payload(exponent, cb);
      ladder.record("root-spectrum", left, right, ca == cb);
      if (ca != cb) {
        return ladder.finish({"root-spectrum", "distinguished", left, right, {}});
      }
    }
  }

  if (is_commutative(sa) && is_commutative(sb)) {
    const FiniteSemigroup ea = idempotent_semilattice(sa).base;
    const FiniteSemigroup eb = idempotent_semilattice(sb).base;
    nlohmann::ordered_json left;
    left["size"] = ea.size();
    nlohmann::ordered_json right;
    right["size"] = eb.size();
    if (ea.size() != eb.size()) {
      ladder.record("idempotent-semilattice", left, right, false);
      return ladder.finish({"idempotent-semilattice", "distinguished", left, right, {}});
    }
    const IsoResult iso = are_isomorphic(ea, eb, options.node_budget);
    left["isomorphic"] = iso.status == IsoResult::Status::isomorphic;
    right["isomorphic"] = iso.status == IsoResult::Status::isomorphic;
    ladder.record("idempotent-semilattice", left, right,
                  iso.status != IsoResult::Status::none);
    if (iso.status == IsoResult::Status::none) {
      return ladder.finish({"idempotent-semilattice", "distinguished", left, right, {}});
    }
  }

  if (is_semilattice(sa) && is_semilattice(sb)) {
    const auto pa = ideal_filter_profile(sa);
    const auto pb = ideal_filter_profile(sb);
    const auto left = profile_payload(pa);
    const auto right = profile_payload(pb);
    ladder.record("principal-ideal-filter", left, right, pa == pb);
    if (pa != pb) {
      return ladder.finish({"principal-ideal-filter", "distinguished", left, right, {}});
    }
  }

  const IsoResult iso = are_isomorphic(sa, sb, options.node_budget);
  nlohmann::ordered_json left;
  left["order"] = sa.size();
  nlohmann::ordered_json right;
  right["order"] = sb.size();
  if (iso.status == IsoResult::Status::none) {
    ladder.record("exhaustive", left, right, false);
    return ladder.finish({"exhaustive", "distinguished", left, right, {}});
  }
  if (iso.status == IsoResult::Status::isomorphic) {
    nlohmann::ordered_json map = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < iso.map->size(); ++i) {
      map.push_back(sb.name((*iso.map)[i]));
    }
    left["map"] = std::move(map);
    ladder.record("exhaustive", left, right, true);
    return ladder.finish({"exhaustive", "equivalent", left, right, {}});
  }
  ladder.record("exhaustive", left, right, true);
  return ladder.finish({"exhaustive", "unknown", left, right, {}});
}

}  // namespace sdpt
