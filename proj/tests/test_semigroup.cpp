#include <doctest.h>

#include <string>
#include <vector>

#include "sdpt/catalog.hpp"
#include "sdpt/semigroup.hpp"

#include "helpers.hpp"

using namespace sdpt;
using sdpt_test::error_kind;

TEST_SUITE("semigroup") {

TEST_CASE("construction rejects malformed tables") {
  CHECK(error_kind([] { FiniteSemigroup::checked({}, {}); }) == "shape");
  CHECK(error_kind([] { FiniteSemigroup::checked({"a"}, {0, 0}); }) == "shape");
  CHECK(error_kind([] { FiniteSemigroup::checked({"a", "a"}, {0, 0, 0, 0}); }) == "syntax");
  CHECK(error_kind([] { FiniteSemigroup::checked({"a", ""}, {0, 0, 0, 1}); }) == "syntax");
  CHECK(error_kind([] { FiniteSemigroup::checked({"a", "b"}, {0, 0, 0, 2}); }) == "index-range");
}

TEST_CASE("associativity failures name the first bad triple") {
  // (p*p)*p = q*p = p but p*(p*p) = p*q = q.
  try {
    FiniteSemigroup::checked({"p", "q"}, {1, 1, 0, 1});
    FAIL("expected an associativity failure");
  } catch (const Error& e) {
    CHECK(e.kind() == "associativity");
    CHECK(std::string(e.what()).find("(p, p, p)") != std::string::npos);
  }
  // from_parts skips the triple scan, validate() still finds it.
  const FiniteSemigroup bad = FiniteSemigroup::from_parts({"p", "q"}, {1, 1, 0, 1});
  CHECK(error_kind([&] { bad.validate(); }) == "associativity");
}

TEST_CASE("element lookup") {
  const FiniteSemigroup s = catalog::get("NIL3");
  CHECK(s.size() == 3);
  CHECK(s.index_of("y") == 2);
  CHECK(s.name(1) == "x");
  CHECK(error_kind([&] { s.index_of("t"); }) == "unknown-name");
}

TEST_CASE("commutativity, zero, group predicates") {
  CHECK(is_commutative(catalog::get("NIL3")));
  CHECK(!is_commutative(catalog::get("S3")));
  CHECK(!is_commutative(catalog::get("LZ2")));

  CHECK(zero_element(catalog::get("NIL3")) == 0);
  CHECK(zero_element(catalog::get("L2")) == 0);
  CHECK(!zero_element(catalog::get("LZ2")).has_value());
  CHECK(!zero_element(catalog::get("Z3")).has_value());

  CHECK(is_group(catalog::get("Z3")));
  CHECK(is_group(catalog::get("S3")));
  CHECK(is_group(catalog::get("T1")));
  CHECK(!is_group(catalog::get("L2")));
  CHECK(!is_group(catalog::get("NIL3")));
}

TEST_CASE("word products fold left to right") {
  const FiniteSemigroup s = catalog::get("NIL3");
  CHECK(word_product(s, {1, 1}) == 2);      // x*x = y
  CHECK(word_product(s, {1, 1, 1}) == 0);   // (x*x)*x = y*x = 0
  CHECK(word_product(s, {2}) == 2);
  CHECK(error_kind([&] { word_product(s, {}); }) == "params");
}

TEST_CASE("monogenic index and period") {
  CHECK(monogenic_index_period(catalog::get("NIL3"), 1) == std::pair<int, int>{3, 1});
  CHECK(monogenic_index_period(catalog::get("GN3"), 2) == std::pair<int, int>{2, 1});
  CHECK(monogenic_index_period(catalog::get("Z3"), 1) == std::pair<int, int>{1, 3});
  CHECK(monogenic_index_period(catalog::get("L2"), 0) == std::pair<int, int>{1, 1});
  CHECK(monogenic_index_period(catalog::monogenic_nilpotent(5), 1) ==
        std::pair<int, int>{5, 1});
}

TEST_CASE("subsemigroup and closure") {
  const FiniteSemigroup s = catalog::get("NIL3");
  CHECK(closure(s, {1}) == std::vector<int>{0, 1, 2});
  CHECK(closure(s, {2}) == std::vector<int>{0, 2});
  CHECK(closure(s, {0}) == std::vector<int>{0});

  const FiniteSemigroup sub = subsemigroup(s, {0, 2});
  CHECK(sub.size() == 2);
  CHECK(sub.names() == std::vector<std::string>{"0", "y"});
  CHECK(sub.table() == std::vector<int>{0, 0, 0, 0});

  CHECK(error_kind([&] { subsemigroup(s, {1}); }) == "not-closed");
  CHECK(error_kind([&] { subsemigroup(s, {}); }) == "shape");
  CHECK(error_kind([&] { subsemigroup(s, {7}); }) == "index-range");
  CHECK(error_kind([&] { closure(s, {}); }) == "shape");
}

TEST_CASE("direct power names tuples with coordinate 0 varying fastest") {
  const FiniteSemigroup sq = direct_power(catalog::get("L2"), 2);
  CHECK(sq.size() == 4);
  CHECK(sq.names() ==
        std::vector<std::string>{"(0,0)", "(1,0)", "(0,1)", "(1,1)"});
  // (1,0)*(0,1) = (0,0)
  CHECK(sq.product(1, 2) == 0);
  CHECK(sq.product(3, 1) == 1);
  sq.validate();

  const FiniteSemigroup pr =
      direct_product(catalog::get("Z2"), catalog::null_semigroup(2));
  CHECK(pr.size() == 4);
  CHECK(pr.name(3) == "(g,x)");
  CHECK(pr.product(3, 3) == 0);  // (g*g, x*x) = (e,0)

  CHECK(error_kind([] { direct_power(catalog::get("L2"), 13); }) == "size-cap");
  CHECK(error_kind([] { direct_power(catalog::get("L2"), 0); }) == "params");
}

TEST_CASE("relabel permutes elements consistently") {
  const FiniteSemigroup s = catalog::get("Z3");
  const std::vector<int> perm = {2, 0, 1};
  const FiniteSemigroup t = relabel(s, perm);
  for (int i = 0; i < 3; ++i) {
    CHECK(t.name(perm[static_cast<std::size_t>(i)]) == s.name(i));
    for (int j = 0; j < 3; ++j) {
      CHECK(t.product(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ==
            perm[static_cast<std::size_t>(s.product(i, j))]);
    }
  }
  CHECK(error_kind([&] { relabel(s, {0, 1}); }) == "params");
  CHECK(error_kind([&] { relabel(s, {0, 0, 1}); }) == "params");
}

TEST_CASE("fingerprints are invariant under relabeling and separate profiles") {
  const FiniteSemigroup z3 = catalog::get("Z3");
  CHECK(fingerprint(z3) == fingerprint(relabel(z3, {2, 0, 1})));

  // Three-element chain vs the meet of two atoms: same order and idempotent
  // count, different divisor profiles.
  const FiniteSemigroup chain = catalog::get("SL3");
  const FiniteSemigroup vee = subsemigroup(direct_power(catalog::get("L2"), 2), {0, 1, 2});
  CHECK(!(fingerprint(chain) == fingerprint(vee)));
}

TEST_CASE("json and text documents round trip") {
  for (const std::string& name : catalog::names()) {
    const FiniteSemigroup s = catalog::get(name);
    CHECK(parse_semigroup(to_json_doc(s)) == s);
    CHECK(parse_semigroup(to_text_doc(s)) == s);
  }
}

TEST_CASE("text format details") {
  const FiniteSemigroup plain = FiniteSemigroup::checked({"0", "1"}, {0, 0, 0, 1});
  const std::string doc = to_text_doc(plain);
  CHECK(doc.find("names") == std::string::npos);
  CHECK(parse_semigroup(doc) == plain);

  CHECK(parse_semigroup("2\n0 0\n0 1\n") == plain);
  const FiniteSemigroup named = parse_semigroup("# names: a b\n2\n0 0\n0 1\n");
  CHECK(named.names() == std::vector<std::string>{"a", "b"});

  const FiniteSemigroup spaced = FiniteSemigroup::checked({"a b", "c"}, {0, 0, 0, 1});
  CHECK(error_kind([&] { to_text_doc(spaced); }) == "io");
}

TEST_CASE("document parse failures") {
  CHECK(error_kind([] { parse_semigroup(""); }) == "syntax");
  CHECK(error_kind([] { parse_semigroup("{"); }) == "syntax");
  CHECK(error_kind([] { parse_semigroup("{\"elements\": [\"a\"]}"); }) == "syntax");
  CHECK(error_kind([] { parse_semigroup("2\n0 0\n"); }) == "shape");
  CHECK(error_kind([] { parse_semigroup("2\n0 0 0\n0 1 0\n"); }) == "shape");
  // Table entries must be associative even when the shape is fine.
  CHECK(error_kind([] { parse_semigroup("2\n1 1\n0 1\n"); }) == "associativity");
}

}  // TEST_SUITE
