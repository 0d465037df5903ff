#include "cuntz/words.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

namespace cuntz {

bool is_prefix(const Word& p, const Word& w) {
  require_same(p.alphabet(), w.alphabet());
  if (p.size() > w.size()) return false;
  return std::equal(p.letters().begin(), p.letters().end(), w.letters().begin());
}

bool prefix_comparable(const Word& x, const Word& y) {
  return is_prefix(x, y) || is_prefix(y, x);
}

std::optional<Word> strip_prefix(const Word& p, const Word& w) {
  if (!is_prefix(p, w)) return std::nullopt;
  return w.suffix(p.size());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (uint8_t c : w.letters()) s.push_back(static_cast<char>('0' + c));
  return s;
}

Word parse_word(Alphabet a, const std::string& text) {
  if (text.empty()) fail(errc::parse, "empty word literal; the empty word is written 'e'");
  if (text == "e") return Word::epsilon(a);
  std::vector<uint8_t> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c >= '0' + a.arity())
      fail(errc::parse, std::string("invalid letter '") + c + "' in word literal");
    letters.push_back(static_cast<uint8_t>(c - '0'));
  }
  return Word(a, std::move(letters));
}

PrefixCode::PrefixCode(Alphabet a, std::vector<Word> words) : alph_(a), words_(std::move(words)) {
  for (const Word& w : words_) require_same(alph_, w.alphabet());
  if (!is_prefix_code(words_)) fail(errc::precondition, "word list is not a prefix code");
}

PrefixCode PrefixCode::sorted() const {
  std::vector<Word> ws = words_;
  std::sort(ws.begin(), ws.end());
  return PrefixCode(alph_, std::move(ws));
}

bool is_prefix_code(std::span<const Word> words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (prefix_comparable(words[i], words[j])) return false;
  return true;
}

PrefixCode max_reduce(Alphabet a, std::span<const Word> words) {
  std::vector<Word> keep;
  for (const Word& w : words) {
    bool minimal = true;
    for (const Word& v : words) {
      if (v == w) continue;
      if (is_prefix(v, w)) {
        minimal = false;
        break;
      }
    }
    if (minimal && std::find(keep.begin(), keep.end(), w) == keep.end()) keep.push_back(w);
  }
  return PrefixCode(a, std::move(keep));
}

namespace {

// Kraft sum scaled by n^L: sum over x of n^(L - |x|).
uint64_t scaled_kraft(const PrefixCode& x, std::size_t depth) {
  uint64_t sum = 0;
  for (const Word& w : x.words()) {
    uint64_t term = 1;
    for (std::size_t k = w.size(); k < depth; ++k) term *= x.alphabet().arity();
    sum += term;
  }
  return sum;
}

uint64_t pow_u64(uint64_t base, std::size_t exp) {
  uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

namespace {

// Linear-time maximality: X is maximal iff it is {eps} or every letter's
// quotient is a nonempty maximal prefix code (the leaves of a complete tree).
bool maximal_by_recursion(const PrefixCode& x) {
  if (x.empty()) return false;
  if (x.size() == 1) return x.words().front().empty();
  for (int i = 0; i < x.alphabet().arity(); ++i)
    if (!maximal_by_recursion(quotient(i, x))) return false;
  return true;
}

}  // namespace

bool is_maximal_prefix_code(const PrefixCode& x) {
  if (x.empty()) return false;
  std::size_t depth = 0;
  for (const Word& w : x.words()) depth = std::max(depth, w.size());
  // Deep codes skip the exponential cross-checks below.
  double cost = std::pow(double(x.alphabet().arity()), double(depth));
  if (cost > double(1 << 20)) return maximal_by_recursion(x);
  const int n = x.alphabet().arity();
  // Walk all length-`depth` words; each must have a prefix in X.
  std::vector<uint8_t> probe(depth, 0);
  bool covered = true;
  while (covered) {
    Word w(x.alphabet(), probe);
    bool hit = false;
    for (const Word& p : x.words())
      if (is_prefix(p, w)) {
        hit = true;
        break;
      }
    if (!hit) {
      covered = false;
      break;
    }
    std::size_t i = depth;
    while (i > 0 && probe[i - 1] == n - 1) probe[--i] = 0;
    if (i == 0) break;
    ++probe[i - 1];
  }
  const bool kraft = scaled_kraft(x, depth) == pow_u64(n, depth);
  if (covered != kraft)
    throw std::logic_error("maximality depth criterion disagrees with Kraft equality");
  if (covered != maximal_by_recursion(x))
    throw std::logic_error("maximality depth criterion disagrees with tree recursion");
  return covered;
}

PrefixCode caret_expand(const PrefixCode& x, std::size_t at) {
  if (at >= x.size()) fail(errc::index_out_of_range, "caret_expand index out of range");
  std::vector<Word> ws;
  ws.reserve(x.size() + x.alphabet().arity() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == at) {
      for (int c = 0; c < x.alphabet().arity(); ++c) ws.push_back(x.word(i).append(c));
    } else {
      ws.push_back(x.word(i));
    }
  }
  return PrefixCode(x.alphabet(), std::move(ws));
}

PrefixCode caret_reduce(const PrefixCode& x, const Word& stem) {
  require_same(x.alphabet(), stem.alphabet());
  const int n = x.alphabet().arity();
  std::vector<std::size_t> child_pos(n, x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int c = 0; c < n; ++c)
      if (x.word(i) == stem.append(c)) child_pos[c] = i;
  for (int c = 0; c < n; ++c)
    if (child_pos[c] == x.size())
      fail(errc::precondition, "caret_reduce: not all children of the stem are present");
  std::vector<Word> ws;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == child_pos[0]) {
      ws.push_back(stem);
    } else if (std::find(child_pos.begin(), child_pos.end(), i) != child_pos.end()) {
      continue;
    } else {
      ws.push_back(x.word(i));
    }
  }
  return PrefixCode(x.alphabet(), std::move(ws));
}

std::vector<PrefixCode> enumerate_mpc(Alphabet a, int max_leaves, std::size_t cap) {
  if (max_leaves < 1) fail(errc::precondition, "max_leaves must be at least 1");
  std::set<std::vector<std::string>> seen;
  std::vector<PrefixCode> out;
  std::vector<PrefixCode> frontier;

  auto key_of = [](const PrefixCode& x) {
    std::vector<std::string> key;
    key.reserve(x.size());
    PrefixCode s = x.sorted();
    for (const Word& w : s.words()) key.push_back(to_string(w));
    return key;
  };
  auto visit = [&](const PrefixCode& x) {
    auto key = key_of(x);
    if (seen.count(key)) return false;
    if (seen.size() >= cap) fail(errc::resource_limit, "enumerate_mpc cap exceeded");
    seen.insert(std::move(key));
    out.push_back(x.sorted());
    frontier.push_back(x.sorted());
    return true;
  };

  visit(PrefixCode(a, {Word::epsilon(a)}));
  while (!frontier.empty()) {
    PrefixCode x = frontier.back();
    frontier.pop_back();
    if (static_cast<int>(x.size()) + a.arity() - 1 > max_leaves) continue;
    for (std::size_t i = 0; i < x.size(); ++i) visit(caret_expand(x, i));
  }
  std::sort(out.begin(), out.end(), [](const PrefixCode& l, const PrefixCode& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l.words() < r.words();
  });
  return out;
}

PrefixCode uniform_mpc(Alphabet a, int height, std::size_t cap) {
  if (height < 0) fail(errc::precondition, "height must be non-negative");
  std::size_t count = 1;
  for (int i = 0; i < height; ++i) {
    count *= a.arity();
    if (count > cap) fail(errc::resource_limit, "uniform_mpc size cap exceeded");
  }
  std::vector<Word> ws;
  ws.reserve(count);
  std::vector<uint8_t> probe(height, 0);
  for (std::size_t k = 0; k < count; ++k) {
    ws.push_back(Word(a, probe));
    std::size_t i = height;
    while (i > 0 && probe[i - 1] == a.arity() - 1) probe[--i] = 0;
    if (i > 0) ++probe[i - 1];
  }
  return PrefixCode(a, std::move(ws));
}

PrefixCode quotient(int letter, const PrefixCode& x) {
  std::vector<Word> ws;
  for (const Word& w : x.words())
    if (!w.empty() && w.letter(0) == letter) ws.push_back(w.suffix(1));
  return PrefixCode(x.alphabet(), std::move(ws));
}

PrefixCode prepend(int letter, const PrefixCode& x) {
  std::vector<Word> ws;
  ws.reserve(x.size());
  for (const Word& w : x.words()) ws.push_back(Word(x.alphabet(), {}).append(letter).concat(w));
  return PrefixCode(x.alphabet(), std::move(ws));
}

bool refines(const PrefixCode& x, const PrefixCode& y) {
  require_same(x.alphabet(), y.alphabet());
  // Every word of X extends a unique word of Y, and over each y the set of
  // extensions forms a maximal prefix code.
  for (const Word& xi : x.words()) {
    bool has = false;
    for (const Word& yj : y.words())
      if (is_prefix(yj, xi)) {
        has = true;
        break;
      }
    if (!has) return false;
  }
  for (const Word& yj : y.words()) {
    std::vector<Word> tails;
    for (const Word& xi : x.words())
      if (auto t = strip_prefix(yj, xi)) tails.push_back(*t);
    if (tails.empty()) return false;
    if (!is_maximal_prefix_code(PrefixCode(y.alphabet(), std::move(tails)))) return false;
  }
  return true;
}

std::string to_string(const PrefixCode& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += to_string(x.word(i));
  }
  return s + "}";
}

PrefixCode parse_prefix_code(Alphabet a, const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    fail(errc::parse, "prefix code literal must be brace-delimited");
  std::vector<Word> ws;
  std::string body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    ws.push_back(parse_word(a, item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return PrefixCode(a, std::move(ws));
}

}  // namespace cuntz
