#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "sdpt/catalog.hpp"
#include "sdpt/epseq.hpp"
#include "sdpt/structure.hpp"

#include "helpers.hpp"

using namespace sdpt;
using sdpt_test::error_kind;

namespace {

const FiniteSemigroup& l2() {
  static const FiniteSemigroup s = catalog::get("L2");
  return s;
}

}  // namespace

TEST_SUITE("epseq") {

TEST_CASE("canonical form shrinks the period and the preperiod") {
  const EpSeq a = EpSeq::make(l2(), {}, {0, 1, 0, 1});
  CHECK(a.preperiod().empty());
  CHECK(a.period() == std::vector<int>{0, 1});
  CHECK(a == parse_epseq(l2(), "|0,1"));

  // A rotated copy hiding behind a preperiod is the same sequence.
  const EpSeq b = EpSeq::make(l2(), {1, 0}, {1, 0});
  CHECK(b.preperiod().empty());
  CHECK(b.period() == std::vector<int>{1, 0});

  CHECK(EpSeq::make(l2(), {0}, {0}) == EpSeq::constant(l2(), 0));
  CHECK(EpSeq::make(l2(), {0, 1, 1}, {1}) == EpSeq::make(l2(), {0}, {1}));
}

TEST_CASE("term access agrees with the written form") {
  const EpSeq a = parse_epseq(l2(), "0,1|1,0");
  const std::vector<int> expect = {0, 1, 1, 0, 1, 0, 1};
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(a.at(i) == expect[i]);
}

TEST_CASE("literals round trip through the parser") {
  for (const std::string lit : {"|0", "|1", "|0,1", "0|1", "|0,1,1,1", "1|0"}) {
    CHECK(epseq_literal(parse_epseq(l2(), lit)) == lit);
  }
  CHECK(error_kind([] { parse_epseq(l2(), "0,1"); }) == "syntax");
  CHECK(error_kind([] { parse_epseq(l2(), "0|1|0"); }) == "syntax");
  CHECK(error_kind([] { parse_epseq(l2(), "0|"); }) == "syntax");
  CHECK(error_kind([] { parse_epseq(l2(), "|0,,1"); }) == "syntax");
  CHECK(error_kind([] { parse_epseq(l2(), "|0,7up"); }) == "unknown-name");
}

TEST_CASE("construction guards") {
  CHECK(error_kind([] { EpSeq::make(l2(), {}, {}); }) == "shape");
  CHECK(error_kind([] { EpSeq::make(l2(), {0}, {2}); }) == "index-range");
  CHECK(error_kind([] {
          EpSeq::make(l2(), {}, std::vector<int>(65537, 0));
        }) == "period-cap");
}

TEST_CASE("pointwise products match a long explicit window") {
  const FiniteSemigroup z3 = catalog::cyclic(3);
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> val(0, 2);
  std::uniform_int_distribution<int> pre_len(0, 4);
  std::uniform_int_distribution<int> per_len(1, 6);
  for (int it = 0; it < 200; ++it) {
    auto draw = [&] {
      std::vector<int> pre(static_cast<std::size_t>(pre_len(rng)));
      std::vector<int> per(static_cast<std::size_t>(per_len(rng)));
      for (int& v : pre) v = val(rng);
      for (int& v : per) v = val(rng);
      return EpSeq::make(z3, std::move(pre), std::move(per));
    };
    const EpSeq a = draw();
    const EpSeq b = draw();
    const EpSeq c = ep_product(a, b);
    for (std::size_t i = 0; i < 60; ++i) {
      CHECK(c.at(i) == z3.product(a.at(i), b.at(i)));
    }
  }
}

TEST_CASE("product guards") {
  CHECK(error_kind([] {
          ep_product(EpSeq::constant(l2(), 0), EpSeq::constant(catalog::cyclic(3), 0));
        }) == "base-mismatch");

  // Periods 65521 and 3 are coprime, so the product period would overflow.
  std::vector<int> big(65521, 0);
  for (std::size_t i = 0; i < big.size(); i += 2) big[i] = 1;
  const EpSeq a = EpSeq::make(l2(), {}, std::move(big));
  REQUIRE(a.period().size() == 65521);
  const EpSeq b = parse_epseq(l2(), "|0,1,1");
  CHECK(error_kind([&] { ep_product(a, b); }) == "period-cap");
}

TEST_CASE("pointwise order over a semilattice") {
  const EpSeq bottom = parse_epseq(l2(), "|0");
  const EpSeq mixed = parse_epseq(l2(), "|0,1");
  const EpSeq top = parse_epseq(l2(), "|1");
  CHECK(ep_leq(bottom, mixed));
  CHECK(ep_leq(mixed, top));
  CHECK(ep_leq(bottom, top));
  CHECK(!ep_leq(top, mixed));

  const EpSeq other = parse_epseq(l2(), "|1,0");
  CHECK(!ep_leq(mixed, other));
  CHECK(!ep_leq(other, mixed));

  CHECK(error_kind([] {
          const FiniteSemigroup z3 = catalog::cyclic(3);
          ep_leq(EpSeq::constant(z3, 0), EpSeq::constant(z3, 1));
        }) == "not-semilattice");
}

TEST_CASE("truncation takes the leading window") {
  const EpSeq a = parse_epseq(l2(), "0|1,0");
  CHECK(ep_truncate(a, 5) == Tuple{0, 1, 0, 1, 0});
  CHECK(error_kind([&] { ep_truncate(a, 0); }) == "params");
}

TEST_CASE("component map sends terms to their idempotents") {
  const FiniteSemigroup s = catalog::get("SL2N");
  const EpSeq a = parse_epseq(s, "a,1|0");
  const EpSeq img = ep_phi(a);
  CHECK(img.base() == idempotent_semilattice(s).base);
  CHECK(epseq_literal(img) == "0,1|0");

  // Over a base with a single idempotent everything collapses.
  const EpSeq c = ep_phi(parse_epseq(catalog::get("GN3"), "g|a,e"));
  CHECK(c == EpSeq::constant(c.base(), 0));

  CHECK(error_kind([] {
          ep_phi(EpSeq::constant(catalog::get("LZ2"), 0));
        }) == "non-commutative");
}

}  // TEST_SUITE
