#include "sdpt/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace sdpt {

namespace {

struct Search {
  const FiniteSemigroup& a;
  const FiniteSemigroup& b;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  std::vector<int> img;       // a-element -> b-element or -1
  std::vector<int> pre;       // b-element -> a-element or -1
  std::vector<int> trail;     // a-elements in assignment order
  std::vector<int> order;     // decision order over a-elements
  std::vector<std::vector<int>> candidates;  // per a-element, same-class b-elements

  Search(const FiniteSemigroup& a_, const FiniteSemigroup& b_, std::uint64_t budget_)
      : a(a_), b(b_), budget(budget_) {}

  // Assign f(u) = v and propagate every product constraint it settles.
  // Returns false on any conflict; the trail is left for the caller to unwind.
  bool assign(int u, int v) {
    img[static_cast<std::size_t>(u)] = v;
    pre[static_cast<std::size_t>(v)] = u;
    trail.push_back(u);
    std::size_t head = trail.size() - 1;
    while (head < trail.size()) {
      const int x = trail[head++];
      const int fx = img[static_cast<std::size_t>(x)];
      for (std::size_t k = 0; k < trail.size(); ++k) {
        const int w = trail[k];
        const int fw = img[static_cast<std::size_t>(w)];
        const int p1 = a.product(x, w);
        const int q1 = b.product(fx, fw);
        if (!settle(p1, q1)) return false;
        const int p2 = a.product(w, x);
        const int q2 = b.product(fw, fx);
        if (!settle(p2, q2)) return false;
      }
    }
    return true;
  }

  bool settle(int p, int q) {
    const int fp = img[static_cast<std::size_t>(p)];
    if (fp >= 0) return fp == q;
    if (pre[static_cast<std::size_t>(q)] >= 0) return false;
    img[static_cast<std::size_t>(p)] = q;
    pre[static_cast<std::size_t>(q)] = p;
    trail.push_back(p);
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail.size() > mark) {
      const int u = trail.back();
      trail.pop_back();
      pre[static_cast<std::size_t>(img[static_cast<std::size_t>(u)])] = -1;
      img[static_cast<std::size_t>(u)] = -1;
    }
  }

  bool dfs(std::size_t depth) {
    while (depth < order.size() && img[static_cast<std::size_t>(order[depth])] >= 0) ++depth;
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int v : candidates[static_cast<std::size_t>(u)]) {
      if (pre[static_cast<std::size_t>(v)] >= 0) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      const std::size_t mark = trail.size();
      if (assign(u, v) && dfs(depth + 1)) return true;
      unwind(mark);
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

IsoResult are_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b,
                         std::uint64_t node_budget) {
  IsoResult result;
  if (a.size() != b.size()) {
    result.status = IsoResult::Status::none;
    return result;
  }
  const Fingerprint fa = fingerprint(a);
  const Fingerprint fb = fingerprint(b);
  if (!(fa == fb)) {
    result.status = IsoResult::Status::none;
    return result;
  }

  const int n = a.size();
  Search search(a, b, node_budget);
  search.img.assign(static_cast<std::size_t>(n), -1);
  search.pre.assign(static_cast<std::size_t>(n), -1);
  search.candidates.resize(static_cast<std::size_t>(n));
  std::vector<int> class_size;
  for (int u = 0; u < n; ++u) {
    const int cls = fa.profile_class[static_cast<std::size_t>(u)];
    for (int v = 0; v < n; ++v) {
      if (fb.profile_class[static_cast<std::size_t>(v)] == cls) {
        search.candidates[static_cast<std::size_t>(u)].push_back(v);
      }
    }
    class_size.push_back(static_cast<int>(search.candidates[static_cast<std::size_t>(u)].size()));
  }
  search.order.resize(static_cast<std::size_t>(n));
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    return class_size[static_cast<std::size_t>(x)] < class_size[static_cast<std::size_t>(y)];
  });

  const bool found = search.dfs(0);
  result.nodes = search.nodes;
  if (found) {
    result.status = IsoResult::Status::isomorphic;
    result.map = search.img;
  } else if (search.exhausted) {
    result.status = IsoResult::Status::unknown;
  } else {
    result.status = IsoResult::Status::none;
  }
  return result;
}

}  // namespace sdpt
