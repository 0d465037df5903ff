#include <random>

#include "doctest.h"

#include "cuntz/cantor.hpp"
#include "cuntz/generate.hpp"

using namespace cuntz;

namespace {

const Alphabet A2(2);

Symbol S(const std::string& s) { return parse_symbol(A2, s); }
TotalElement T(const std::string& s) { return TotalElement(S(s)); }

}  // namespace

TEST_CASE("totality is enforced") {
  CHECK_THROWS_AS(TotalElement(S("{0:1}")), error);
  CHECK_NOTHROW(TotalElement(S("{0:1,1:0}")));
}

TEST_CASE("alpha on small elements") {
  TotalElement id = TotalElement::identity(A2);
  CHECK(alpha_op(id, 0).symbol() == S("{e:0}"));
  CHECK(alpha_op(T("{0:1,1:0}"), 0).symbol() == S("{e:1}"));
}

TEST_CASE("lambda assembles quotients") {
  TotalElement x = T("{0:1,1:0}");
  std::vector<TotalElement> parts{alpha_op(x, 0), alpha_op(x, 1)};
  CHECK(lambda_op(parts) == x);  // CA1
}

TEST_CASE("worked element from the nested term") {
  CantorTerm t = parse_term(A2, "L(a0(a0(X)),L(a0(a0(X)),a0(a1(X))))");
  TotalElement v = eval_term(t, TotalElement::identity(A2));
  CHECK(v.symbol().canon() == S("{0:00,10:00,11:01}"));

  CantorTerm back = term_of(v);
  CHECK(eval_term(back, TotalElement::identity(A2)) == v);
}

TEST_CASE("term text round trips") {
  for (const char* s :
       {"X", "a0(X)", "a0(a1(X))", "L(a0(X),a1(X))",
        "L(a0(a0(X)),L(a0(a0(X)),a0(a1(X))))"}) {
    CantorTerm t = parse_term(A2, s);
    CHECK(to_string(t) == s);
  }
  CHECK_THROWS_AS(parse_term(A2, "L(X)"), error);
  CHECK_THROWS_AS(parse_term(A2, "a2(X)"), error);
}

TEST_CASE("leaf addresses of pure lambda terms") {
  CantorTerm t = parse_term(A2, "L(a0(X),L(a1(X),X))");
  // Leaf addresses of the tree shape, independent of leaf decorations.
  CHECK(mpc_of_term(t) == parse_prefix_code(A2, "{0,10,11}"));
  CHECK(mpc_of_term(parse_term(A2, "X")) == parse_prefix_code(A2, "{e}"));
  CHECK(mpc_of_term(parse_term(A2, "L(X,X)")) == parse_prefix_code(A2, "{0,1}"));
}

TEST_CASE("CA1 and CA2 on random elements") {
  std::mt19937_64 rng(61);
  for (int n : {2, 3}) {
    Alphabet a(n);
    for (int iter = 0; iter < 150; ++iter) {
      TotalElement x = random_total(a, 6, 3, rng);
      std::vector<TotalElement> alphas;
      for (int i = 0; i < n; ++i) alphas.push_back(alpha_op(x, i));
      CHECK(lambda_op(alphas) == x);

      std::vector<TotalElement> fs;
      for (int i = 0; i < n; ++i) fs.push_back(random_total(a, 5, 3, rng));
      TotalElement l = lambda_op(fs);
      for (int i = 0; i < n; ++i) CHECK(alpha_op(l, i).symbol() == fs[i].symbol());
    }
  }
}

TEST_CASE("evaluation is left multiplication") {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 150; ++iter) {
    CantorTerm t = random_term(A2, 3, rng);
    TotalElement x = random_total(A2, 6, 3, rng);
    TotalElement at_id = eval_term(t, TotalElement::identity(A2));
    TotalElement at_x = eval_term(t, x);
    CHECK(normalize(at_x.symbol()) == normalize(compose(x.symbol(), at_id.symbol())));
  }
}

TEST_CASE("term_of inverts evaluation") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 200; ++iter) {
    TotalElement f = random_total(A2, 6, 3, rng);
    CHECK(eval_term(term_of(f), TotalElement::identity(A2)) == f);
  }
}

TEST_CASE("unit multiplication commutes with the operations") {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 100; ++iter) {
    GroupElement g = random_unit(A2, 6, rng());
    TotalElement f = random_total(A2, 5, 3, rng);
    auto lmul = [&](const TotalElement& h) {
      return TotalElement(compose(g.repr().inner(), h.symbol()));
    };
    for (int i = 0; i < 2; ++i) CHECK(alpha_op(lmul(f), i) == lmul(alpha_op(f, i)));
    std::vector<TotalElement> fs{f, random_total(A2, 5, 3, rng)};
    std::vector<TotalElement> gfs{lmul(fs[0]), lmul(fs[1])};
    CHECK(lambda_op(gfs) == lmul(lambda_op(fs)));
  }
}
