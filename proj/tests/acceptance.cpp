// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Every check is exact; oracles are brute force over bounded depth.

#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "cuntz/cantor.hpp"
#include "cuntz/generate.hpp"
#include "cuntz/normal.hpp"
#include "cuntz/polycyclic.hpp"
#include "cuntz/streams.hpp"
#include "cuntz/thompson.hpp"

using namespace cuntz;

namespace {

bool all_ok = true;

void report(int id, const char* what, bool ok) {
  std::printf("criterion %2d [%s] %s\n", id, ok ? "pass" : "FAIL", what);
  if (!ok) all_ok = false;
}

// Enumerate all words of exactly `depth` letters, applying fn to each; stops
// early when fn returns false.  Returns the conjunction.
bool for_all_at_depth(Alphabet a, std::size_t depth, const std::function<bool(const Word&)>& fn) {
  const int n = a.arity();
  std::vector<uint8_t> probe(depth, 0);
  for (;;) {
    if (!fn(Word(a, probe))) return false;
    std::size_t i = depth;
    while (i > 0 && probe[i - 1] == n - 1) probe[--i] = 0;
    if (i == 0) return true;
    ++probe[i - 1];
  }
}

// 1: compose agrees with the pointwise action oracle.
bool criterion1() {
  std::mt19937_64 rng(1001);
  for (int n : {2, 3}) {
    Alphabet a(n);
    for (int iter = 0; iter < 500; ++iter) {
      Symbol f = random_symbol(a, 5, 3, rng);
      Symbol g = random_symbol(a, 5, 3, rng);
      Symbol fg = compose(f, g);
      std::size_t depth = std::max({f.max_word_length(), g.max_word_length(),
                                    fg.max_word_length()}) + 2;
      if (n == 3 && depth > 9) depth = 9;  // keep the sweep under a second
      bool ok = for_all_at_depth(a, depth, [&](const Word& w) {
        auto via = act(g, w);
        auto composite = via ? act(f, *via) : std::nullopt;
        return act(fg, w) == composite;
      });
      if (!ok) return false;
    }
  }
  return true;
}

// 2: confluence and uniqueness of the normal form under caret walks.
bool criterion2() {
  std::mt19937_64 rng(1002);
  for (int seed_sym = 0; seed_sym < 100; ++seed_sym) {
    Symbol f = random_symbol(Alphabet(2), 5, 3, rng);
    StandardSymbol nf = normalize(f);
    for (int walk = 0; walk < 500; ++walk) {
      Symbol g = f;
      std::uniform_int_distribution<int> len(0, 20);
      int steps = len(rng);
      for (int s = 0; s < steps; ++s) {
        if (g.size() == 0) break;
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        std::size_t at = pick(rng);
        std::uniform_int_distribution<int> coin(0, 1);
        if (coin(rng) && has_caret_at(g, at))
          g = delete_caret(g, at);
        else
          g = insert_caret(g, at);
      }
      if (!(normalize(g) == nf)) return false;
    }
  }
  return true;
}

// 3: Lenz equality iff action equality, exhaustively at small size.
bool criterion3() {
  Alphabet a(2);
  std::vector<Word> words;
  for (std::size_t len = 0; len <= 2; ++len)
    for_all_at_depth(a, len, [&](const Word& w) {
      words.push_back(w);
      return true;
    });

  // All symbols with <= 3 pairs whose domains form a prefix code.
  std::vector<Symbol> pool;
  pool.push_back(Symbol::zero(a));
  std::size_t m = words.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t oi = 0; oi < m; ++oi) {
      pool.emplace_back(PrefixCode(a, {words[i]}), std::vector<Word>{words[oi]});
      for (std::size_t j = i + 1; j < m; ++j) {
        if (prefix_comparable(words[i], words[j])) continue;
        for (std::size_t oj = 0; oj < m; ++oj) {
          pool.emplace_back(PrefixCode(a, {words[i], words[j]}),
                            std::vector<Word>{words[oi], words[oj]});
          for (std::size_t k = j + 1; k < m; ++k) {
            if (prefix_comparable(words[i], words[k]) ||
                prefix_comparable(words[j], words[k]))
              continue;
            for (std::size_t ok = 0; ok < m; ++ok)
              pool.emplace_back(PrefixCode(a, {words[i], words[j], words[k]}),
                                std::vector<Word>{words[oi], words[oj], words[ok]});
          }
        }
      }
    }

  // Precompute each symbol's normal form and its depth-4 action signature;
  // the pairwise sweep then compares cached values.
  std::vector<Symbol> normals;
  std::vector<std::vector<std::optional<Word>>> sigs;
  normals.reserve(pool.size());
  sigs.reserve(pool.size());
  for (const Symbol& f : pool) {
    normals.push_back(normalize(f).inner());
    std::vector<std::optional<Word>> sig;
    for_all_at_depth(a, 4, [&](const Word& w) {
      sig.push_back(act(f, w));
      return true;
    });
    sigs.push_back(std::move(sig));
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      if ((normals[i] == normals[j]) != (sigs[i] == sigs[j])) return false;
  return true;
}

// 4: maximal prefix code enumeration counts and structure.
bool criterion4() {
  Alphabet a(2);
  std::size_t expect[] = {1, 1, 2, 5, 14};
  auto codes = enumerate_mpc(a, 5);
  for (int k = 1; k <= 5; ++k) {
    std::size_t count = 0;
    for (const auto& c : codes)
      if (c.size() == static_cast<std::size_t>(k)) ++count;
    if (count != expect[k - 1]) return false;
  }

  // Independent brute-force scan: all prefix codes of <= 5 words drawn from
  // words of length <= 4, testing maximality directly.
  std::vector<Word> words;
  for (std::size_t len = 0; len <= 4; ++len)
    for_all_at_depth(a, len, [&](const Word& w) {
      words.push_back(w);
      return true;
    });
  std::vector<std::vector<Word>> found;
  std::vector<Word> current;
  std::function<void(std::size_t)> scan = [&](std::size_t from) {
    if (!current.empty() && current.size() <= 5 &&
        is_maximal_prefix_code(PrefixCode(a, current)))
      found.push_back(current);
    if (current.size() == 5) return;
    for (std::size_t i = from; i < words.size(); ++i) {
      bool clash = false;
      for (const Word& w : current)
        if (prefix_comparable(w, words[i])) clash = true;
      if (clash) continue;
      current.push_back(words[i]);
      scan(i + 1);
      current.pop_back();
    }
  };
  scan(0);
  // The scan misses the codes needing words longer than 4 letters; none of
  // size <= 5 over n = 2 does (depth of a 5-leaf tree is at most 4).
  if (found.size() != codes.size()) return false;

  // Every enumerated code caret-reduces to {eps}.
  for (const auto& c : codes) {
    PrefixCode x = c;
    while (x.size() > 1) {
      bool reduced = false;
      for (std::size_t i = 0; i < x.size() && !reduced; ++i) {
        const Word& w = x.word(i);
        if (w.empty() || w.letter(w.size() - 1) != 0) continue;
        Word stem = w.prefix(w.size() - 1);
        try {
          x = caret_reduce(x, stem);
          reduced = true;
        } catch (const error&) {
        }
      }
      if (!reduced) return false;
    }
    if (!(x == PrefixCode(a, {Word::epsilon(a)}))) return false;
  }
  return true;
}

// 5: Boolean algebra laws on idempotents.
bool criterion5() {
  Alphabet a(2);
  std::mt19937_64 rng(1005);
  StandardSymbol zero = StandardSymbol::zero(a);
  StandardSymbol one = StandardSymbol::identity(a);
  for (int iter = 0; iter < 1000; ++iter) {
    StandardSymbol e = random_idempotent(a, 4, rng);
    StandardSymbol f = random_idempotent(a, 4, rng);
    StandardSymbol g = random_idempotent(a, 4, rng);
    if (!(cn_meet(e, f) == cn_meet(f, e))) return false;
    if (!(cn_join(e, f) == cn_join(f, e))) return false;
    if (!(cn_meet(cn_meet(e, f), g) == cn_meet(e, cn_meet(f, g)))) return false;
    if (!(cn_join(cn_join(e, f), g) == cn_join(e, cn_join(f, g)))) return false;
    if (!(cn_meet(e, cn_join(f, g)) == cn_join(cn_meet(e, f), cn_meet(e, g)))) return false;
    StandardSymbol ce = complement(e);
    if (!(complement(cn_join(e, f)) == cn_meet(ce, complement(f)))) return false;
    if (!(complement(cn_meet(e, f)) == cn_join(ce, complement(f)))) return false;
  }

  // Exhaustive complement laws on idempotents with word length <= 3: every
  // idempotent is a join of projections {w:w}, so enumerate subsets of a
  // uniform depth-3 code.
  PrefixCode u3 = uniform_mpc(a, 3);
  for (unsigned mask = 0; mask < (1u << u3.size()); ++mask) {
    std::vector<Word> dom;
    for (std::size_t i = 0; i < u3.size(); ++i)
      if (mask & (1u << i)) dom.push_back(u3.word(i));
    StandardSymbol se = normalize(Symbol(PrefixCode(a, dom), dom));
    StandardSymbol ce = complement(se);
    if (!(cn_meet(se, ce) == zero)) return false;
    if (!(cn_join(se, ce) == one)) return false;
  }
  return true;
}

// 6: group axioms and the word problem for the unit groups, n = 2 and 3.
bool criterion6() {
  std::mt19937_64 rng(1006);
  for (int n : {2, 3}) {
    Alphabet a(n);
    GroupElement id = GroupElement::identity(a);
    for (int iter = 0; iter < 500; ++iter) {
      GroupElement x = random_unit(a, 7, rng());
      GroupElement y = random_unit(a, 7, rng());
      GroupElement z = random_unit(a, 7, rng());
      if (!(g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z)))) return false;
      if (!(g_mul(x, g_inv(x)) == id)) return false;
      if (!(g_mul(g_inv(x), x) == id)) return false;
      if (!(g_mul(x, id) == x && g_mul(id, x) == x)) return false;
      const Symbol& fx = x.repr().inner();
      const Symbol& fy = y.repr().inner();
      if (g_eq(x, y) != act_agree_at_depth(fx, fy, oracle_depth(fx, fy))) return false;
    }
  }
  return true;
}

// 7: Cantor algebra laws CA1 and CA2.
bool criterion7() {
  std::mt19937_64 rng(1007);
  for (int n : {2, 3}) {
    Alphabet a(n);
    for (int iter = 0; iter < 500; ++iter) {
      TotalElement x = random_total(a, 6, 3, rng);
      std::vector<TotalElement> alphas;
      for (int i = 0; i < n; ++i) alphas.push_back(alpha_op(x, i));
      if (!(lambda_op(alphas) == x)) return false;
      std::vector<TotalElement> fs;
      for (int i = 0; i < n; ++i) fs.push_back(random_total(a, 5, 3, rng));
      TotalElement l = lambda_op(fs);
      for (int i = 0; i < n; ++i)
        if (!(alpha_op(l, i).symbol() == fs[i].symbol())) return false;
    }
  }
  return true;
}

// 8: the worked nested term evaluates to the expected symbol exactly.
bool criterion8() {
  Alphabet a(2);
  CantorTerm t = parse_term(a, "L(a0(a0(X)),L(a0(a0(X)),a0(a1(X))))");
  TotalElement v = eval_term(t, TotalElement::identity(a));
  if (!(v.symbol().canon() == parse_symbol(a, "{0:00,10:00,11:01}"))) return false;
  CantorTerm back = term_of(v);
  return eval_term(back, TotalElement::identity(a)) == v;
}

// 9: freeness and commutation of unit multiplication with the operations.
bool criterion9() {
  Alphabet a(2);
  std::mt19937_64 rng(1009);
  for (int iter = 0; iter < 500; ++iter) {
    CantorTerm t = random_term(a, 3, rng);
    TotalElement x = random_total(a, 6, 3, rng);
    TotalElement at_id = eval_term(t, TotalElement::identity(a));
    if (!(normalize(eval_term(t, x).symbol()) ==
          normalize(compose(x.symbol(), at_id.symbol()))))
      return false;
  }
  for (int iter = 0; iter < 500; ++iter) {
    GroupElement g = random_unit(a, 6, rng());
    auto lmul = [&](const TotalElement& h) {
      return TotalElement(compose(g.repr().inner(), h.symbol()));
    };
    TotalElement f = random_total(a, 5, 3, rng);
    for (int i = 0; i < 2; ++i)
      if (!(alpha_op(lmul(f), i) == lmul(alpha_op(f, i)))) return false;
    std::vector<TotalElement> fs{f, random_total(a, 5, 3, rng)};
    std::vector<TotalElement> gfs{lmul(fs[0]), lmul(fs[1])};
    if (!(lambda_op(gfs) == lmul(lambda_op(fs)))) return false;
  }
  return true;
}

// 10: groupoid laws, index additivity, Lenz agreement on streams.
bool criterion10() {
  Alphabet a(2);
  std::mt19937_64 rng(1010);
  for (int iter = 0; iter < 1000; ++iter) {
    EvPeriodicString w = random_stream(a, 3, rng);
    Word x = random_word(a, 3, rng), y = random_word(a, 3, rng), z = random_word(a, 3, rng);
    Word v = random_word(a, 3, rng);
    auto idx = [](const Word& p, const Word& q) {
      return static_cast<std::int64_t>(p.size()) - static_cast<std::int64_t>(q.size());
    };
    GroupoidElement g1(w.prepended(x), idx(x, y), w.prepended(y));
    GroupoidElement g2(w.prepended(y), idx(y, z), w.prepended(z));
    GroupoidElement g3(w.prepended(z), idx(z, v), w.prepended(v));
    if (!(gp_compose(gp_compose(g1, g2), g3) == gp_compose(g1, gp_compose(g2, g3))))
      return false;
    if (gp_compose(g1, g2).index() != g1.index() + g2.index()) return false;
    if (!(gp_compose(g1, GroupoidElement::unit(g1.src())) == g1)) return false;
    if (!(gp_compose(gp_compose(g1, gp_inverse(g1)), g1) == g1)) return false;
  }

  // Lenz agreement on all purely periodic streams with |per| <= 4 plus
  // random preperiods, for random symbol pairs.
  std::vector<EvPeriodicString> sample;
  for (std::size_t len = 1; len <= 4; ++len)
    for_all_at_depth(a, len, [&](const Word& per) {
      sample.push_back(eps_normalize(Word::epsilon(a), per));
      return true;
    });
  std::vector<EvPeriodicString> with_pre = sample;
  for (const auto& s : sample)
    for (std::size_t len = 1; len <= 4; ++len)
      for_all_at_depth(a, len, [&](const Word& pre) {
        with_pre.push_back(s.prepended(pre));
        return true;
      });
  std::mt19937_64 rng2(2010);
  for (int iter = 0; iter < 60; ++iter) {
    Symbol f = random_symbol(a, 4, 2, rng2);
    Symbol g = random_symbol(a, 4, 2, rng2);
    bool agree = true;
    for (const auto& s : with_pre)
      if (eps_apply(f, s) != eps_apply(g, s)) agree = false;
    if (lenz_equal(f, g) != agree) return false;
  }
  return true;
}

// 11: restriction axioms RS1-RS4 on random symbol pairs.
bool criterion11() {
  std::mt19937_64 rng(1011);
  for (int n : {2, 3}) {
    Alphabet a(n);
    for (int iter = 0; iter < 500; ++iter) {
      Symbol f = random_symbol(a, 5, 3, rng);
      Symbol g = random_symbol(a, 5, 3, rng);
      Symbol e = star(random_symbol(a, 5, 3, rng));
      if (!(star(e) == e)) return false;                                      // RS1
      if (!(compose(f, star(f)).canon() == f.canon())) return false;          // RS2
      if (!(star(compose(star(f), g)) == star(compose(f, g)))) return false;  // RS3
      if (!(compose(star(f), g).canon() ==
            compose(g, star(compose(f, g))).canon()))
        return false;  // RS4
    }
  }
  return true;
}

// 12: tight covers agree with the depth brute-force oracle, exhaustively.
bool criterion12() {
  Alphabet a(2);
  std::vector<Word> words;
  for (std::size_t len = 0; len <= 3; ++len)
    for_all_at_depth(a, len, [&](const Word& w) {
      words.push_back(w);
      return true;
    });

  for (const Word& x : words) {
    // All subsets of the extensions of x (within length <= 3).
    std::vector<Word> exts;
    for (const Word& c : words)
      if (is_prefix(x, c)) exts.push_back(c);
    for (unsigned mask = 1; mask < (1u << exts.size()); ++mask) {
      std::vector<Word> cover;
      std::size_t maxlen = 0;
      for (std::size_t i = 0; i < exts.size(); ++i)
        if (mask & (1u << i)) {
          cover.push_back(exts[i]);
          maxlen = std::max(maxlen, exts[i].size());
        }
      // Oracle: every extension of x of length maxlen is prefix-comparable
      // to some cover element.
      bool oracle = true;
      std::size_t tail_len = maxlen - x.size();
      for_all_at_depth(a, tail_len, [&](const Word& tail) {
        Word w = x.concat(tail);
        bool hit = false;
        for (const Word& c : cover)
          if (prefix_comparable(c, w)) hit = true;
        if (!hit) oracle = false;
        return true;
      });
      if (is_tight_cover(cover, x) != oracle) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  report(1, "compose matches the pointwise action oracle", criterion1());
  report(2, "caret walks normalize confluently", criterion2());
  report(3, "normal-form equality iff action equality (exhaustive)", criterion3());
  report(4, "maximal prefix code enumeration counts and reduction", criterion4());
  report(5, "Boolean laws on idempotents", criterion5());
  report(6, "group axioms and word problem for the unit groups", criterion6());
  report(7, "exchange laws between lambda and the alphas", criterion7());
  report(8, "worked nested term evaluates and inverts exactly", criterion8());
  report(9, "freeness and unit multiplication commute with the operations", criterion9());
  report(10, "groupoid laws, index additivity, stream separation", criterion10());
  report(11, "restriction axioms RS1-RS4", criterion11());
  report(12, "tight covers match the depth oracle (exhaustive)", criterion12());
  return all_ok ? 0 : 1;
}
