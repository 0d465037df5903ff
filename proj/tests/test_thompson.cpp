#include <random>

#include "doctest.h"

#include "cuntz/generate.hpp"
#include "cuntz/thompson.hpp"

using namespace cuntz;

namespace {

const Alphabet A2(2);

GroupElement G(const std::string& s) {
  return GroupElement(normalize(parse_symbol(A2, s)));
}

}  // namespace

TEST_CASE("construction rejects non-units") {
  CHECK_THROWS_AS(GroupElement(normalize(parse_symbol(A2, "{e:0}"))), error);
  CHECK_THROWS_AS(GroupElement(StandardSymbol::zero(A2)), error);
}

TEST_CASE("products and inverses") {
  GroupElement swap = G("{0:1,1:0}");
  GroupElement id = GroupElement::identity(A2);
  CHECK(g_mul(swap, swap) == id);
  CHECK(g_mul(swap, id) == swap);
  CHECK(g_inv(id) == id);

  GroupElement v = G("{0:00,10:01,11:1}");
  CHECK(g_inv(v) == G("{00:0,01:10,1:11}"));
  CHECK(g_mul(v, g_inv(v)) == id);
  CHECK(g_inv(g_inv(v)) == v);
}

TEST_CASE("orders") {
  CHECK(g_order(G("{0:1,1:0}")) == 2);
  CHECK(g_order(GroupElement::identity(A2)) == 1);
  CHECK(g_order(G("{0:00,10:01,11:1}"), 64) == std::nullopt);
}

TEST_CASE("units on the caret tree pair") {
  // Domain and range both {0,1}: exactly the two pairings, both of order <= 2.
  GroupElement a = G("{0:0,1:1}");
  GroupElement b = G("{0:1,1:0}");
  CHECK(*g_order(a) <= 2);
  CHECK(*g_order(b) <= 2);
  CHECK_FALSE(a == b);
}

TEST_CASE("group axioms on random units") {
  for (int n : {2, 3}) {
    Alphabet a(n);
    GroupElement id = GroupElement::identity(a);
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 120; ++iter) {
      GroupElement x = random_unit(a, 7, rng());
      GroupElement y = random_unit(a, 7, rng());
      GroupElement z = random_unit(a, 7, rng());
      CHECK(g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z)));
      CHECK(g_mul(x, g_inv(x)) == id);
      CHECK(g_mul(id, x) == x);
      CHECK(is_unit(g_mul(x, y).repr()));
      CHECK(g_eq(x, y) ==
            act_agree_at_depth(x.repr().inner(), y.repr().inner(),
                               oracle_depth(x.repr().inner(), y.repr().inner())));
    }
  }
}

TEST_CASE("powers") {
  GroupElement v = G("{0:00,10:01,11:1}");
  GroupElement p = GroupElement::identity(A2);
  for (int k = 1; k <= 6; ++k) {
    p = g_mul(p, v);
    CHECK(g_pow(v, k) == p);
    CHECK(g_pow(v, -k) == g_inv(p));
  }
  CHECK(g_pow(v, 0) == GroupElement::identity(A2));
}

TEST_CASE("random_unit is deterministic per seed and always a unit") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GroupElement u1 = random_unit(A2, 6, seed);
    GroupElement u2 = random_unit(A2, 6, seed);
    CHECK(u1 == u2);
    CHECK(is_unit(u1.repr()));
  }
}
