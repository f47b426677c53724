#include <doctest.h>

#include <string>
#include <vector>

#include "sdpt/catalog.hpp"
#include "sdpt/semigroup.hpp"
#include "sdpt/structure.hpp"

#include "helpers.hpp"

using namespace sdpt;
using sdpt_test::error_kind;

TEST_SUITE("structure") {

TEST_CASE("idempotents and band predicates") {
  CHECK(idempotents(catalog::get("S3")) == std::vector<int>{0});
  CHECK(idempotents(catalog::get("L2")) == std::vector<int>{0, 1});
  CHECK(idempotents(catalog::get("NIL3")) == std::vector<int>{0});
  CHECK(idempotents(catalog::get("SL2N")) == std::vector<int>{0, 2});

  CHECK(is_band(catalog::get("RB22")));
  CHECK(is_band(catalog::get("L2")));
  CHECK(!is_band(catalog::get("Z2")));
  CHECK(is_semilattice(catalog::get("SL3")));
  CHECK(!is_semilattice(catalog::get("RB22")));
  CHECK(!is_semilattice(catalog::get("LZ2")));
}

TEST_CASE("archimedean components collapse onto their idempotents") {
  const FiniteSemigroup s = catalog::get("SL2N");  // a*a = 0, idempotents 0 and 1
  const ArchimedeanDecomposition dec = archimedean(s);
  REQUIRE(dec.components.size() == 2);
  CHECK(dec.components[0] == std::vector<int>{0, 1});
  CHECK(dec.components[1] == std::vector<int>{2});
  CHECK(dec.phi == std::vector<int>{0, 0, 2});

  // One idempotent absorbing everything: a single component.
  const ArchimedeanDecomposition gn = archimedean(catalog::get("GN3"));
  CHECK(gn.components.size() == 1);
  CHECK(gn.phi == std::vector<int>{0, 0, 0});

  const ArchimedeanDecomposition nil = archimedean(catalog::get("NIL3"));
  CHECK(nil.components.size() == 1);

  CHECK(error_kind([] { archimedean(catalog::get("S3")); }) == "non-commutative");
}

TEST_CASE("semilattice order") {
  const SemilatticeOrder ord = semilattice_order(catalog::get("SL3"));
  REQUIRE(ord.zero.has_value());
  CHECK(*ord.zero == 0);
  CHECK(ord.leq[1][2]);   // e <= 1
  CHECK(!ord.leq[2][1]);
  CHECK(ord.leq[0][2]);
  CHECK(ord.ambient == std::vector<int>{0, 1, 2});

  CHECK(principal_ideal(ord, 1) == std::vector<int>{0, 1});
  CHECK(principal_filter(ord, 1) == std::vector<int>{1, 2});
  CHECK(principal_filter(ord, 0) == std::vector<int>{0, 1, 2});

  CHECK(error_kind([] { semilattice_order(catalog::get("Z3")); }) == "not-semilattice");
  CHECK(error_kind([] { semilattice_order(catalog::get("RB22")); }) == "not-semilattice");
}

TEST_CASE("idempotent semilattice of a commutative semigroup") {
  const SemilatticeOrder e = idempotent_semilattice(catalog::get("SL2N"));
  CHECK(e.base.size() == 2);
  CHECK(e.base.names() == std::vector<std::string>{"0", "1"});
  CHECK(e.ambient == std::vector<int>{0, 2});
  CHECK(e.base.table() == std::vector<int>{0, 0, 0, 1});

  CHECK(idempotent_semilattice(catalog::get("GN3")).base.size() == 1);
  CHECK(idempotent_semilattice(catalog::get("Z2xN2")).base.size() == 1);
  CHECK(error_kind([] { idempotent_semilattice(catalog::get("LZ2")); }) == "non-commutative");
}

TEST_CASE("minimal ideal and its group test") {
  const MinimalIdeal nil = minimal_ideal(catalog::get("NIL3"));
  CHECK(nil.members == std::vector<int>{0});
  CHECK(nil.group);

  const MinimalIdeal gn = minimal_ideal(catalog::get("GN3"));
  CHECK(gn.members == std::vector<int>{0, 1});
  CHECK(gn.group);

  const MinimalIdeal s3 = minimal_ideal(catalog::get("S3"));
  CHECK(s3.members.size() == 6);
  CHECK(s3.group);

  const MinimalIdeal rb = minimal_ideal(catalog::get("RB22"));
  CHECK(rb.members.size() == 4);
  CHECK(!rb.group);

  CHECK(minimal_ideal(catalog::get("SL3")).members == std::vector<int>{0});
}

TEST_CASE("nilpotency class") {
  CHECK(nilpotency_class(catalog::get("NIL3")) == 3);
  CHECK(nilpotency_class(catalog::get("N2")) == 2);
  CHECK(nilpotency_class(catalog::get("N3")) == 2);
  CHECK(nilpotency_class(catalog::get("T1")) == 1);
  CHECK(nilpotency_class(catalog::monogenic_nilpotent(4)) == 4);
  CHECK(!nilpotency_class(catalog::get("L2")).has_value());
  CHECK(!nilpotency_class(catalog::get("Z3")).has_value());
}

TEST_CASE("rees quotients collapse an ideal to a fresh zero") {
  const FiniteSemigroup gn = catalog::get("GN3");
  const FiniteSemigroup q = rees_quotient(gn, {0, 1});
  CHECK(q.size() == 2);
  CHECK(q.names() == std::vector<std::string>{"0", "a"});
  CHECK(q.table() == std::vector<int>{0, 0, 0, 0});
  CHECK(nilpotency_class(q) == 2);

  const FiniteSemigroup nil = catalog::get("NIL3");
  const FiniteSemigroup q2 = rees_quotient(nil, {0, 2});
  CHECK(q2.names() == std::vector<std::string>{"0", "x"});
  CHECK(q2.product(1, 1) == 0);

  CHECK(error_kind([&] { rees_quotient(gn, {0}); }) == "not-ideal");
  CHECK(error_kind([&] { rees_quotient(nil, {}); }) == "not-ideal");

  // The fresh zero steps aside when an element is already called "0".
  const FiniteSemigroup odd = FiniteSemigroup::checked({"z", "0"}, {0, 0, 0, 0});
  const FiniteSemigroup q3 = rees_quotient(odd, {0});
  CHECK(q3.names() == std::vector<std::string>{"0_", "0"});
}

TEST_CASE("extension decomposition splits kernel group from quotient") {
  const ExtensionDecomposition gn = extension_decomposition(catalog::get("GN3"));
  CHECK(gn.kernel == std::vector<int>{0, 1});
  CHECK(gn.group.size() == 2);
  CHECK(gn.quotient.size() == 2);
  CHECK(!gn.group_trivial);
  CHECK(!gn.quotient_trivial);
  CHECK(gn.quotient_class == 2);

  const ExtensionDecomposition nil = extension_decomposition(catalog::get("NIL3"));
  CHECK(nil.group_trivial);
  CHECK(nil.quotient.size() == 3);
  CHECK(nil.quotient_class == 3);

  const ExtensionDecomposition zn = extension_decomposition(catalog::get("Z2xN2"));
  CHECK(zn.group.size() == 2);
  CHECK(zn.quotient.size() == 3);
  CHECK(zn.quotient_class == 2);

  const ExtensionDecomposition z3 = extension_decomposition(catalog::get("Z3"));
  CHECK(z3.group.size() == 3);
  CHECK(z3.quotient_trivial);

  CHECK(error_kind([] { extension_decomposition(catalog::get("L2")); }) == "precondition");
  CHECK(error_kind([] { extension_decomposition(catalog::get("S3")); }) == "precondition");
}

TEST_CASE("rectangular band recognition") {
  CHECK(rectangular_band_dimensions(catalog::get("RB22")) == std::pair<int, int>{2, 2});
  CHECK(rectangular_band_dimensions(catalog::get("LZ2")) == std::pair<int, int>{2, 1});
  CHECK(rectangular_band_dimensions(catalog::get("RZ2")) == std::pair<int, int>{1, 2});
  CHECK(!rectangular_band_dimensions(catalog::get("L2")).has_value());
  CHECK(!rectangular_band_dimensions(catalog::get("Z2")).has_value());

  const FiniteSemigroup rb = catalog::rectangular_band(3, 2);
  CHECK(rectangular_band_dimensions(rb) == std::pair<int, int>{3, 2});
  for (int x = 0; x < rb.size(); ++x)
    for (int y = 0; y < rb.size(); ++y)
      for (int z = 0; z < rb.size(); ++z) {
        CHECK(rb.product(rb.product(x, y), z) == rb.product(x, z));
      }
}

TEST_CASE("minimal nonzero element of a semilattice") {
  const SemilatticeOrder sq = semilattice_order(direct_power(catalog::get("L2"), 2));
  const int atom = minimal_nonzero(sq);
  CHECK(atom == 1);
  CHECK(sq.base.name(atom) == "(1,0)");

  CHECK(minimal_nonzero(semilattice_order(catalog::chain_semilattice(4))) == 1);

  CHECK(error_kind([] {
          minimal_nonzero(semilattice_order(catalog::get("T1")));
        }) == "trivial-semilattice");
}

}  // TEST_SUITE
