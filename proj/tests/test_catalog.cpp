#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "sdpt/catalog.hpp"
#include "sdpt/isomorphism.hpp"
#include "sdpt/semigroup.hpp"
#include "sdpt/structure.hpp"

#include "helpers.hpp"

using namespace sdpt;
using sdpt_test::error_kind;

TEST_SUITE("catalog") {

TEST_CASE("every entry is a valid semigroup of the advertised order") {
  const std::map<std::string, int> orders = {
      {"T1", 1},  {"L2", 2},   {"SL3", 3}, {"SL2N", 3}, {"Z2", 2},
      {"Z3", 3},  {"S3", 6},   {"N2", 2},  {"N3", 3},   {"NIL3", 3},
      {"GN3", 3}, {"LZ2", 2},  {"RZ2", 2}, {"RB22", 4}, {"Z2xN2", 4},
  };
  const auto listed = catalog::names();
  CHECK(listed.size() == orders.size());
  for (const auto& name : listed) {
    const FiniteSemigroup s = catalog::get(name);
    s.validate();
    REQUIRE(orders.count(name) == 1);
    CHECK(s.size() == orders.at(name));
  }
  CHECK(error_kind([] { catalog::get("nope"); }) == "catalog");
}

TEST_CASE("entry spot checks") {
  const FiniteSemigroup s3 = catalog::get("S3");
  CHECK(is_group(s3));
  CHECK(!is_commutative(s3));

  const FiniteSemigroup lz = catalog::get("LZ2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(lz.product(i, j) == i);
  const FiniteSemigroup rz = catalog::get("RZ2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(rz.product(i, j) == j);

  CHECK(catalog::get("GN3") == catalog::cyclic_by_null_extension(2, 1));
  CHECK(catalog::get("Z2xN2") ==
        direct_product(catalog::cyclic(2), catalog::null_semigroup(2)));
  CHECK(are_isomorphic(catalog::get("NIL3"), catalog::monogenic_nilpotent(3)).status ==
        IsoResult::Status::isomorphic);
}

TEST_CASE("cyclic groups") {
  for (int m = 1; m <= 6; ++m) {
    const FiniteSemigroup s = catalog::cyclic(m);
    CHECK(s.size() == m);
    CHECK(is_group(s));
    CHECK(is_commutative(s));
  }
  CHECK(catalog::cyclic(3).names() == std::vector<std::string>{"e", "g", "g2"});
  CHECK(error_kind([] { catalog::cyclic(0); }) == "params");
}

TEST_CASE("null semigroups") {
  const FiniteSemigroup n5 = catalog::null_semigroup(5);
  CHECK(n5.names() == std::vector<std::string>{"0", "x", "y", "z", "w"});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(n5.product(i, j) == 0);
  CHECK(catalog::null_semigroup(6).name(5) == "x5");
  CHECK(nilpotency_class(catalog::null_semigroup(3)) == 2);
  CHECK(error_kind([] { catalog::null_semigroup(0); }) == "params");
}

TEST_CASE("chain semilattices") {
  const FiniteSemigroup c4 = catalog::chain_semilattice(4);
  CHECK(is_semilattice(c4));
  CHECK(c4.names() == std::vector<std::string>{"c0", "c1", "c2", "c3"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c4.product(i, j) == std::min(i, j));
}

TEST_CASE("monogenic nilpotent semigroups") {
  const FiniteSemigroup m4 = catalog::monogenic_nilpotent(4);
  CHECK(m4.names() == std::vector<std::string>{"0", "t", "t2", "t3"});
  CHECK(nilpotency_class(m4) == 4);
  CHECK(closure(m4, {1}) == std::vector<int>{0, 1, 2, 3});
  CHECK(m4.product(1, 2) == 3);
  CHECK(m4.product(2, 2) == 0);
  CHECK(error_kind([] { catalog::monogenic_nilpotent(1); }) == "params");
}

TEST_CASE("rectangular bands") {
  const FiniteSemigroup rb = catalog::rectangular_band(3, 2);
  CHECK(rb.size() == 6);
  CHECK(rb.name(0) == "(0,0)");
  CHECK(rectangular_band_dimensions(rb) == std::pair<int, int>{3, 2});
  CHECK(error_kind([] { catalog::rectangular_band(0, 2); }) == "params");
}

TEST_CASE("cyclic-by-null extensions") {
  const FiniteSemigroup s = catalog::cyclic_by_null_extension(3, 2);
  CHECK(s.size() == 5);
  s.validate();
  CHECK(is_commutative(s));
  CHECK(idempotents(s) == std::vector<int>{0});
  const ExtensionDecomposition dec = extension_decomposition(s);
  CHECK(dec.group.size() == 3);
  CHECK(dec.quotient_class == 2);
  CHECK(error_kind([] { catalog::cyclic_by_null_extension(2, 0); }) == "params");
}

TEST_CASE("a directory of documents overrides the builtins") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sdpt-catalog-test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "L2.json");
    out << to_json_doc(catalog::cyclic(2));
  }
  CHECK(catalog::get("L2", dir.string()) == catalog::cyclic(2));
  CHECK(catalog::get("SL3", dir.string()) == catalog::get("SL3"));
  fs::remove_all(dir);
}

}  // TEST_SUITE
