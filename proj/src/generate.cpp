#include "cuntz/generate.hpp"

namespace cuntz {

Word random_word(Alphabet a, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, a.arity() - 1);
  Word w = Word::epsilon(a);
  std::size_t l = len(rng);
  for (std::size_t i = 0; i < l; ++i) w = w.append(letter(rng));
  return w;
}

PrefixCode random_prefix_code(Alphabet a, int max_leaves, int drops, std::mt19937_64& rng) {
  PrefixCode x(a, {Word::epsilon(a)});
  while (static_cast<int>(x.size()) + a.arity() - 1 <= max_leaves) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) break;
    std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
    x = caret_expand(x, pick(rng));
  }
  std::vector<Word> ws = x.words();
  for (int d = 0; d < drops && ws.size() > 1; ++d) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng)) ws.erase(ws.begin() + std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng));
  }
  return PrefixCode(a, std::move(ws));
}

Symbol random_symbol(Alphabet a, int max_leaves, std::size_t max_out_len, std::mt19937_64& rng) {
  PrefixCode dom = random_prefix_code(a, max_leaves, 2, rng);
  std::vector<Word> out;
  out.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) out.push_back(random_word(a, max_out_len, rng));
  return Symbol(std::move(dom), std::move(out));
}

Symbol random_injective_symbol(Alphabet a, int max_leaves, std::mt19937_64& rng) {
  PrefixCode dom = random_prefix_code(a, max_leaves, 2, rng);
  PrefixCode ran = random_prefix_code(a, 2 * max_leaves, 0, rng);
  while (ran.size() < dom.size()) {
    std::uniform_int_distribution<std::size_t> pick(0, ran.size() - 1);
    ran = caret_expand(ran, pick(rng));
  }
  std::vector<std::size_t> idx(ran.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<Word> out;
  out.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) out.push_back(ran.word(idx[i]));
  return Symbol(std::move(dom), std::move(out));
}

StandardSymbol random_idempotent(Alphabet a, std::size_t max_len, std::mt19937_64& rng) {
  PrefixCode dom = random_prefix_code(a, 1 << std::min<std::size_t>(max_len, 4), 3, rng);
  std::vector<Word> keep;
  for (const Word& w : dom.words())
    if (w.size() <= max_len) keep.push_back(w);
  PrefixCode trimmed(a, std::move(keep));
  return normalize(Symbol(trimmed, trimmed.words()));
}

TotalElement random_total(Alphabet a, int max_leaves, std::size_t max_out_len, std::mt19937_64& rng) {
  PrefixCode dom = random_prefix_code(a, max_leaves, 0, rng);
  std::vector<Word> out;
  out.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) out.push_back(random_word(a, max_out_len, rng));
  return TotalElement(Symbol(std::move(dom), std::move(out)));
}

CantorTerm random_term(Alphabet a, int depth, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth <= 0 || coin(rng) == 0) return CantorTerm::leaf(random_word(a, 3, rng));
  std::vector<CantorTerm> children;
  children.reserve(a.arity());
  for (int i = 0; i < a.arity(); ++i) children.push_back(random_term(a, depth - 1, rng));
  return CantorTerm::lambda(std::move(children));
}

EvPeriodicString random_stream(Alphabet a, std::size_t max_len, std::mt19937_64& rng) {
  Word pre = random_word(a, max_len, rng);
  Word per = random_word(a, max_len - 1, rng).append(
      std::uniform_int_distribution<int>(0, a.arity() - 1)(rng));
  return EvPeriodicString(pre, per);
}

}  // namespace cuntz
