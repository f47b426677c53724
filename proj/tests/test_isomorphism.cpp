#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sdpt/catalog.hpp"
#include "sdpt/isomorphism.hpp"
#include "sdpt/semigroup.hpp"

using namespace sdpt;

namespace {

void check_map_is_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                              const std::vector<int>& map) {
  REQUIRE(static_cast<int>(map.size()) == a.size());
  REQUIRE(a.size() == b.size());
  std::vector<bool> hit(static_cast<std::size_t>(b.size()), false);
  for (int v : map) {
    REQUIRE(v >= 0);
    REQUIRE(v < b.size());
    REQUIRE(!hit[static_cast<std::size_t>(v)]);
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      CHECK(map[static_cast<std::size_t>(a.product(i, j))] ==
            b.product(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]));
    }
}

}  // namespace

TEST_SUITE("isomorphism") {

TEST_CASE("every catalog entry is isomorphic to itself") {
  for (const auto& name : catalog::names()) {
    const FiniteSemigroup s = catalog::get(name);
    const IsoResult res = are_isomorphic(s, s);
    REQUIRE(res.status == IsoResult::Status::isomorphic);
    check_map_is_isomorphism(s, s, *res.map);
  }
}

TEST_CASE("relabelings are recognized with a verified map") {
  const FiniteSemigroup s3 = catalog::get("S3");
  const IsoResult r1 = are_isomorphic(s3, relabel(s3, {5, 4, 3, 2, 1, 0}));
  REQUIRE(r1.status == IsoResult::Status::isomorphic);
  check_map_is_isomorphism(s3, relabel(s3, {5, 4, 3, 2, 1, 0}), *r1.map);

  const FiniteSemigroup rb = catalog::get("RB22");
  const FiniteSemigroup rb2 = relabel(rb, {1, 2, 3, 0});
  const IsoResult r2 = are_isomorphic(rb, rb2);
  REQUIRE(r2.status == IsoResult::Status::isomorphic);
  check_map_is_isomorphism(rb, rb2, *r2.map);
}

TEST_CASE("structure is matched across different presentations") {
  // The three-element null extension of a point and the monogenic nilpotent
  // of class 3 are the same semigroup under different names.
  const IsoResult r1 =
      are_isomorphic(catalog::get("NIL3"), catalog::monogenic_nilpotent(3));
  REQUIRE(r1.status == IsoResult::Status::isomorphic);
  check_map_is_isomorphism(catalog::get("NIL3"), catalog::monogenic_nilpotent(3), *r1.map);

  const IsoResult r2 = are_isomorphic(
      catalog::cyclic(6), direct_product(catalog::cyclic(2), catalog::cyclic(3)));
  REQUIRE(r2.status == IsoResult::Status::isomorphic);
}

TEST_CASE("non-isomorphic pairs are rejected") {
  CHECK(are_isomorphic(catalog::cyclic(4),
                       direct_product(catalog::cyclic(2), catalog::cyclic(2)))
            .status == IsoResult::Status::none);
  CHECK(are_isomorphic(catalog::get("LZ2"), catalog::get("RZ2")).status ==
        IsoResult::Status::none);
  CHECK(are_isomorphic(catalog::get("L2"), catalog::get("Z2")).status ==
        IsoResult::Status::none);
  CHECK(are_isomorphic(catalog::get("L2"), catalog::get("SL3")).status ==
        IsoResult::Status::none);

  const FiniteSemigroup chain = catalog::get("SL3");
  const FiniteSemigroup vee =
      subsemigroup(direct_power(catalog::get("L2"), 2), {0, 1, 2});
  const IsoResult r = are_isomorphic(chain, vee);
  CHECK(r.status == IsoResult::Status::none);
  // Profile screening settles this pair before any search starts.
  CHECK(r.nodes == 0);
}

TEST_CASE("the node budget turns exhaustion into unknown") {
  const FiniteSemigroup rb = catalog::get("RB22");
  const FiniteSemigroup rb2 = relabel(rb, {1, 0, 3, 2});
  CHECK(are_isomorphic(rb, rb2, 1).status == IsoResult::Status::unknown);
  const IsoResult full = are_isomorphic(rb, rb2);
  CHECK(full.status == IsoResult::Status::isomorphic);
  CHECK(full.nodes >= 1);
}

TEST_CASE("the answer does not depend on the operand order") {
  const std::vector<std::pair<FiniteSemigroup, FiniteSemigroup>> pairs = {
      {catalog::get("NIL3"), catalog::monogenic_nilpotent(3)},
      {catalog::get("LZ2"), catalog::get("RZ2")},
      {catalog::cyclic(4), direct_product(catalog::cyclic(2), catalog::cyclic(2))},
  };
  for (const auto& [a, b] : pairs) {
    CHECK(are_isomorphic(a, b).status == are_isomorphic(b, a).status);
  }
}

}  // TEST_SUITE
