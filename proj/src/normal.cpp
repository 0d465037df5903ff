#include "cuntz/normal.hpp"

namespace cuntz {

Symbol insert_caret(const Symbol& f, std::size_t at) {
  if (at >= f.size()) fail(errc::index_out_of_range, "insert_caret index out of range");
  std::vector<Word> d, o;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == at) {
      for (int c = 0; c < f.alphabet().arity(); ++c) {
        d.push_back(f.dom(i).append(c));
        o.push_back(f.out(i).append(c));
      }
    } else {
      d.push_back(f.dom(i));
      o.push_back(f.out(i));
    }
  }
  return Symbol(PrefixCode(f.alphabet(), std::move(d)), std::move(o));
}

bool has_caret_at(const Symbol& f, std::size_t at) {
  const int n = f.alphabet().arity();
  if (at + n > f.size()) return false;
  const Word& d0 = f.dom(at);
  const Word& o0 = f.out(at);
  if (d0.empty() || o0.empty()) return false;
  if (d0.letter(d0.size() - 1) != 0 || o0.letter(o0.size() - 1) != 0) return false;
  Word x = d0.prefix(d0.size() - 1);
  Word y = o0.prefix(o0.size() - 1);
  for (int c = 0; c < n; ++c)
    if (!(f.dom(at + c) == x.append(c)) || !(f.out(at + c) == y.append(c))) return false;
  return true;
}

Symbol delete_caret(const Symbol& f, std::size_t stem_index) {
  if (!has_caret_at(f, stem_index))
    fail(errc::no_caret, "delete_caret: no caret at the given position");
  const int n = f.alphabet().arity();
  std::vector<Word> d, o;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == stem_index) {
      d.push_back(f.dom(i).prefix(f.dom(i).size() - 1));
      o.push_back(f.out(i).prefix(f.out(i).size() - 1));
      i += n - 1;
    } else {
      d.push_back(f.dom(i));
      o.push_back(f.out(i));
    }
  }
  return Symbol(PrefixCode(f.alphabet(), std::move(d)), std::move(o));
}

StandardSymbol normalize(const Symbol& f) {
  Symbol g = f.canon();
  // Greedy leftmost deletion; replacement keeps the lexicographic order, but a
  // deletion can expose a caret to its left, so rescan from the start.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (has_caret_at(g, i)) {
        g = delete_caret(g, i);
        changed = true;
        break;
      }
    }
  }
  return StandardSymbol(std::move(g));
}

bool lenz_equal(const Symbol& f, const Symbol& g) {
  require_same(f.alphabet(), g.alphabet());
  return normalize(f) == normalize(g);
}

StandardSymbol cn_mul(const StandardSymbol& f, const StandardSymbol& g) {
  return normalize(compose(f.inner(), g.inner()));
}

StandardSymbol cn_meet(const StandardSymbol& f, const StandardSymbol& g) {
  return normalize(meet(f.inner(), g.inner()));
}

StandardSymbol cn_join(const StandardSymbol& f, const StandardSymbol& g) {
  return normalize(join(f.inner(), g.inner()));
}

bool is_idempotent(const StandardSymbol& f) {
  return f.inner().dom_words() == f.inner().out_words();
}

StandardSymbol complement(const StandardSymbol& e) {
  if (!is_idempotent(e)) fail(errc::not_idempotent, "complement requires an idempotent");
  if (e.inner().is_zero()) return StandardSymbol::identity(e.alphabet());
  std::size_t depth = e.inner().max_word_length();
  // Complement inside the uniform refinement of depth max|x|; normalization
  // erases the choice of refinement.
  PrefixCode full = uniform_mpc(e.alphabet(), static_cast<int>(depth));
  std::vector<Word> d;
  for (const Word& w : full.words()) {
    bool covered = false;
    for (const Word& x : e.inner().dom_words())
      if (is_prefix(x, w)) {
        covered = true;
        break;
      }
    if (!covered) d.push_back(w);
  }
  return normalize(Symbol(PrefixCode(e.alphabet(), d), d));
}

bool is_unit(const StandardSymbol& f) {
  const Symbol& s = f.inner();
  if (s.is_zero()) return false;
  if (!is_injective(s)) return false;
  return is_maximal_prefix_code(s.dom_code()) &&
         is_maximal_prefix_code(PrefixCode(s.alphabet(), s.out_words()));
}

StandardSymbol embed_pn(const PnElement& f) {
  if (f.is_zero()) return StandardSymbol::zero(f.alphabet());
  return normalize(
      Symbol(PrefixCode(f.alphabet(), {f.in()}), {f.out()}));
}

bool cover_to_join_check(
    const std::function<StandardSymbol(const PnElement&)>& theta, Alphabet a,
    const Word& x, std::span<const Word> cover) {
  if (!is_tight_cover(cover, x))
    fail(errc::precondition, "cover_to_join_check requires a tight cover");
  // Premise: the letters' range projections join to 1 in the target.
  StandardSymbol letters_join = theta(pn_mul(
      PnElement(Word::epsilon(a).append(0), Word::epsilon(a)),
      pn_inv(PnElement(Word::epsilon(a).append(0), Word::epsilon(a)))));
  for (int c = 1; c < a.arity(); ++c) {
    PnElement gen(Word::epsilon(a).append(c), Word::epsilon(a));
    letters_join = cn_join(letters_join, theta(pn_mul(gen, pn_inv(gen))));
  }
  if (!(letters_join == StandardSymbol::identity(letters_join.alphabet())))
    return true;  // premise fails; nothing to check
  StandardSymbol lhs = theta(PnElement(x, x));
  StandardSymbol rhs = theta(PnElement(cover[0], cover[0]));
  for (std::size_t i = 1; i < cover.size(); ++i)
    rhs = cn_join(rhs, theta(PnElement(cover[i], cover[i])));
  return lhs == rhs;
}

}  // namespace cuntz
