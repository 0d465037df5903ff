#include "cuntz/symbols.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cuntz {

Symbol::Symbol(PrefixCode dom, std::vector<Word> out)
    : alph_(dom.alphabet()), dom_(dom.words()), out_(std::move(out)) {
  if (dom_.size() != out_.size())
    fail(errc::precondition, "symbol requires |X| = |Y|");
  for (const Word& w : out_) require_same(alph_, w.alphabet());
}

Symbol Symbol::canon() const {
  std::vector<std::size_t> order(dom_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return dom_[i] < dom_[j]; });
  std::vector<Word> d, o;
  d.reserve(dom_.size());
  o.reserve(dom_.size());
  for (std::size_t i : order) {
    d.push_back(dom_[i]);
    o.push_back(out_[i]);
  }
  return Symbol(PrefixCode(alph_, std::move(d)), std::move(o));
}

std::size_t Symbol::max_word_length() const {
  std::size_t m = 0;
  for (const Word& w : dom_) m = std::max(m, w.size());
  for (const Word& w : out_) m = std::max(m, w.size());
  return m;
}

std::optional<Word> act(const Symbol& f, const Word& w) {
  require_same(f.alphabet(), w.alphabet());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (auto u = strip_prefix(f.dom(i), w)) return f.out(i).concat(*u);
  return std::nullopt;
}

Symbol compose(const Symbol& f, const Symbol& g) {
  require_same(f.alphabet(), g.alphabet());
  // Term y_i x_i^-1 . v_j u_j^-1:  (y_i s) u_j^-1 when v_j = x_i s,
  // y_i (u_j t)^-1 when x_i = v_j t, else nothing.
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Word& xi = f.dom(i);
      const Word& yi = f.out(i);
      const Word& uj = g.dom(j);
      const Word& vj = g.out(j);
      if (auto s = strip_prefix(xi, vj)) {
        pairs.emplace_back(uj, yi.concat(*s));
      } else if (auto t = strip_prefix(vj, xi)) {
        pairs.emplace_back(uj.concat(*t), yi);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Word> d, o;
  for (auto& [in, out] : pairs) {
    d.push_back(std::move(in));
    o.push_back(std::move(out));
  }
  assert(is_prefix_code(d));
  return Symbol(PrefixCode(f.alphabet(), std::move(d)), std::move(o));
}

Symbol star(const Symbol& f) {
  std::vector<Word> d = f.dom_words();
  return Symbol(PrefixCode(f.alphabet(), d), d);
}

bool is_injective(const Symbol& f) {
  return is_prefix_code(f.out_words());
}

Symbol invert(const Symbol& f) {
  if (!is_injective(f))
    fail(errc::not_injective, "symbol is not injective; no inverse in D_n");
  return Symbol(PrefixCode(f.alphabet(), f.out_words()), f.dom_words());
}

Symbol join(const Symbol& f, const Symbol& g) {
  require_same(f.alphabet(), g.alphabet());
  // Agreement wherever the domain cones overlap.
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (auto s = strip_prefix(f.dom(i), g.dom(j))) {
        if (!(f.out(i).concat(*s) == g.out(j)))
          fail(errc::incompatible, "join: symbols disagree on overlapping domain");
      } else if (auto t = strip_prefix(g.dom(j), f.dom(i))) {
        if (!(g.out(j).concat(*t) == f.out(i)))
          fail(errc::incompatible, "join: symbols disagree on overlapping domain");
      }
    }
  }
  // Keep the prefix-minimal domain words; their cones cover everything else.
  std::vector<std::pair<Word, Word>> pairs;
  auto add = [&](const Word& x, const Word& y) {
    for (const auto& [px, py] : pairs)
      if (is_prefix(px, x)) return;  // subsumed by a coarser pair
    std::erase_if(pairs, [&](const auto& p) { return is_prefix(x, p.first); });
    pairs.emplace_back(x, y);
  };
  for (std::size_t i = 0; i < f.size(); ++i) add(f.dom(i), f.out(i));
  for (std::size_t j = 0; j < g.size(); ++j) add(g.dom(j), g.out(j));
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Word> d, o;
  for (auto& [x, y] : pairs) {
    d.push_back(std::move(x));
    o.push_back(std::move(y));
  }
  return Symbol(PrefixCode(f.alphabet(), std::move(d)), std::move(o));
}

Symbol meet(const Symbol& f, const Symbol& g) {
  require_same(f.alphabet(), g.alphabet());
  // On every cone of the common domain refinement both maps are linear, so
  // agreement at the refinement word decides agreement on its whole cone.
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Word& xi = f.dom(i);
      const Word& xj = g.dom(j);
      if (!prefix_comparable(xi, xj)) continue;
      const Word& w = xi.size() >= xj.size() ? xi : xj;
      Word fw = *act(f, w);
      Word gw = *act(g, w);
      if (fw == gw) pairs.emplace_back(w, fw);
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<Word> d, o;
  for (auto& [x, y] : pairs) {
    d.push_back(std::move(x));
    o.push_back(std::move(y));
  }
  return Symbol(PrefixCode(f.alphabet(), std::move(d)), std::move(o));
}

bool leq(const Symbol& f, const Symbol& g) {
  return compose(g, star(f)) == f.canon();
}

bool is_essential(const Symbol& f) {
  if (f.is_zero()) return false;
  return is_maximal_prefix_code(f.dom_code()) &&
         is_maximal_prefix_code(max_reduce(f.alphabet(), f.out_words()));
}

bool essential_in(const Symbol& f, const Symbol& g) {
  if (!leq(f, g)) fail(errc::precondition, "essential_in requires f <= g");
  return refines(f.dom_code(), g.dom_code());
}

bool act_agree_at_depth(const Symbol& f, const Symbol& g, std::size_t depth) {
  require_same(f.alphabet(), g.alphabet());
  const int n = f.alphabet().arity();
  double total = 1;
  for (std::size_t i = 0; i < depth; ++i) total *= n;
  if (total > (1u << 22)) fail(errc::resource_limit, "act oracle depth too large");
  std::vector<uint8_t> probe(depth, 0);
  while (true) {
    Word w(f.alphabet(), probe);
    if (act(f, w) != act(g, w)) return false;
    std::size_t i = depth;
    while (i > 0 && probe[i - 1] == n - 1) probe[--i] = 0;
    if (i == 0) return true;
    ++probe[i - 1];
  }
}

std::size_t oracle_depth(const Symbol& f, const Symbol& g) {
  return std::max(f.max_word_length(), g.max_word_length()) + 2;
}

std::string to_string(const Symbol& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += to_string(f.dom(i)) + ":" + to_string(f.out(i));
  }
  return s + "}";
}

Symbol parse_symbol(Alphabet a, const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    fail(errc::parse, "symbol literal must be brace-delimited");
  std::string body = text.substr(1, text.size() - 2);
  std::vector<Word> d, o;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',')) ++pos;
    if (pos >= body.size()) break;
    std::size_t end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    std::string item = body.substr(pos, end - pos);
    while (!item.empty() && item.back() == ' ') item.pop_back();
    std::size_t colon = item.find(':');
    if (colon == std::string::npos) fail(errc::parse, "symbol pair must be 'x:y'");
    d.push_back(parse_word(a, item.substr(0, colon)));
    o.push_back(parse_word(a, item.substr(colon + 1)));
    pos = end + 1;
  }
  return Symbol(PrefixCode(a, std::move(d)), std::move(o));
}

}  // namespace cuntz
