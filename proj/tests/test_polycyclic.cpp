#include <optional>
#include <vector>

#include "doctest.h"

#include "cuntz/polycyclic.hpp"

using namespace cuntz;

namespace {

const Alphabet A2(2);

PnElement P(const std::string& s) { return parse_pn(A2, s); }
Word W(const std::string& s) { return parse_word(A2, s); }

// Partial-function oracle: the map of (out, in) applied to w.
std::optional<Word> pn_act(const PnElement& f, const Word& w) {
  if (f.is_zero()) return std::nullopt;
  auto tail = strip_prefix(f.in(), w);
  if (!tail) return std::nullopt;
  return f.out().concat(*tail);
}

// Agreement of an element with the oracle composite of two others, on all
// strings of the given depth.
bool matches_composite(const PnElement& fg, const PnElement& f, const PnElement& g,
                       std::size_t depth) {
  std::vector<uint8_t> probe(depth, 0);
  for (;;) {
    Word w(A2, probe);
    auto via = pn_act(g, w);
    auto composite = via ? pn_act(f, *via) : std::nullopt;
    if (pn_act(fg, w) != composite) return false;
    std::size_t i = depth;
    while (i > 0 && probe[i - 1] == 1) probe[--i] = 0;
    if (i == 0) return true;
    ++probe[i - 1];
  }
}

}  // namespace

TEST_CASE("product formula with function oracle") {
  CHECK(pn_mul(P("0:1"), P("10:e")) == P("00:e"));
  CHECK(matches_composite(P("00:e"), P("0:1"), P("10:e"), 6));
  CHECK(pn_mul(P("0:1"), P("e:e")) == P("0:1"));
  CHECK(pn_mul(P("0:0"), P("1:1")) == PnElement::zero(A2));
}

TEST_CASE("inverse") {
  CHECK(pn_inv(P("0:1")) == P("1:0"));
  CHECK(pn_inv(PnElement::zero(A2)) == PnElement::zero(A2));
  CHECK(pn_inv(P("e:e")) == P("e:e"));
  PnElement f = P("01:10");
  CHECK(pn_mul(pn_mul(f, pn_inv(f)), f) == f);
}

TEST_CASE("natural partial order") {
  CHECK(pn_leq(P("01:11"), P("0:1")));
  CHECK_FALSE(pn_leq(P("0:1"), P("01:11")));
  CHECK(pn_leq(PnElement::zero(A2), P("0:1")));
}

TEST_CASE("compatibility and orthogonality") {
  CHECK(pn_orthogonal(P("0:1"), P("1:0")));
  CHECK(pn_compatible(P("0:1"), P("0:1")));
  CHECK_FALSE(pn_compatible(P("0:1"), P("00:1")));
  // Idempotents are orthogonal exactly when their words are incomparable.
  for (const char* x : {"e", "0", "1", "00", "01"})
    for (const char* y : {"e", "0", "1", "00", "01"}) {
      PnElement ex(W(x), W(x)), ey(W(y), W(y));
      CHECK(pn_orthogonal(ex, ey) == !prefix_comparable(W(x), W(y)));
    }
}

TEST_CASE("associativity, exhaustively at small length") {
  std::vector<PnElement> all{PnElement::zero(A2)};
  std::vector<Word> words{W("e"), W("0"), W("1"), W("00"), W("11")};
  for (const Word& x : words)
    for (const Word& y : words) all.emplace_back(x, y);
  for (const auto& f : all)
    for (const auto& g : all)
      for (const auto& h : all)
        CHECK(pn_mul(pn_mul(f, g), h) == pn_mul(f, pn_mul(g, h)));
}

TEST_CASE("E*-unitary at word length <= 2") {
  std::vector<Word> words{W("e"), W("0"), W("1"), W("00"), W("01"), W("10"), W("11")};
  for (const Word& e : words)
    for (const Word& x : words)
      for (const Word& y : words) {
        PnElement f(x, y);
        if (pn_leq(PnElement(e, e), f)) CHECK(x == y);
      }
}

TEST_CASE("tight covers") {
  std::vector<Word> mpc{W("0"), W("10"), W("11")};
  CHECK(is_tight_cover(mpc, W("e")));
  std::vector<Word> self{W("01")};
  CHECK(is_tight_cover(self, W("01")));
  std::vector<Word> both{W("00"), W("01")};
  CHECK(is_tight_cover(both, W("0")));
  std::vector<Word> half{W("00")};
  CHECK_FALSE(is_tight_cover(half, W("0")));
  std::vector<Word> bad{W("10")};
  CHECK_THROWS_AS(is_tight_cover(bad, W("0")), error);
}

TEST_CASE("text forms") {
  CHECK(to_string(P("0:1")) == "0:1");
  CHECK(to_string(PnElement::zero(A2)) == "ZERO");
  CHECK(parse_pn(A2, "ZERO") == PnElement::zero(A2));
  CHECK(to_string(P("e:e")) == "e:e");
}
