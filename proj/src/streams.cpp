#include "cuntz/streams.hpp"

#include <algorithm>
#include <numeric>

namespace cuntz {

namespace {

// Shortest period of v via the KMP failure function; v is a power of its
// length-p prefix iff p divides |v|.
Word primitive_root(const Word& v) {
  const std::size_t m = v.size();
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && v.letter(i) != v.letter(k)) k = fail[k - 1];
    if (v.letter(i) == v.letter(k)) ++k;
    fail[i] = k;
  }
  std::size_t p = m - fail[m - 1];
  if (m % p == 0) return v.prefix(p);
  return v;
}

Word rotate_right(const Word& v) {
  Word r = Word::epsilon(v.alphabet()).append(v.letter(v.size() - 1));
  return r.concat(v.prefix(v.size() - 1));
}

Word rotate_left(const Word& v, std::size_t k) {
  k %= v.size();
  return v.suffix(k).concat(v.prefix(k));
}

}  // namespace

EvPeriodicString::EvPeriodicString(Word pre, Word per)
    : pre_(std::move(pre)), per_(std::move(per)) {
  require_same(pre_.alphabet(), per_.alphabet());
  if (per_.empty()) fail(errc::precondition, "period must be nonempty");
  per_ = primitive_root(per_);
  // Absorb preperiod letters that merely rotate the period.
  while (!pre_.empty() && pre_.letter(pre_.size() - 1) == per_.letter(per_.size() - 1)) {
    per_ = rotate_right(per_);
    pre_ = pre_.prefix(pre_.size() - 1);
  }
}

int EvPeriodicString::letter_at(std::size_t i) const {
  if (i < pre_.size()) return pre_.letter(i);
  return per_.letter((i - pre_.size()) % per_.size());
}

Word EvPeriodicString::prefix(std::size_t len) const {
  Word w = Word::epsilon(alphabet());
  for (std::size_t i = 0; i < len; ++i) w = w.append(letter_at(i));
  return w;
}

EvPeriodicString EvPeriodicString::tail(std::size_t k) const {
  if (k <= pre_.size()) return EvPeriodicString(pre_.suffix(k), per_);
  return EvPeriodicString(Word::epsilon(alphabet()), rotate_left(per_, k - pre_.size()));
}

EvPeriodicString EvPeriodicString::prepended(const Word& x) const {
  return EvPeriodicString(x.concat(pre_), per_);
}

EvPeriodicString eps_normalize(const Word& pre, const Word& per) {
  return EvPeriodicString(pre, per);
}

std::optional<EvPeriodicString> eps_apply(const Symbol& f, const EvPeriodicString& s) {
  require_same(f.alphabet(), s.alphabet());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Word& x = f.dom(i);
    bool match = true;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x.letter(k) != s.letter_at(k)) {
        match = false;
        break;
      }
    if (match) return s.tail(x.size()).prepended(f.out(i));
  }
  return std::nullopt;
}

GroupoidElement::GroupoidElement(EvPeriodicString tgt, std::int64_t k, EvPeriodicString src)
    : tgt_(std::move(tgt)), src_(std::move(src)), k_(k) {
  require_same(tgt_.alphabet(), src_.alphabet());
  // Constructive membership check: some pair of cut points a - b = k leaves
  // equal tails.  Beyond the preperiods the tails cycle with period
  // lcm(|v1|, |v2|), so a bounded search decides.
  const std::int64_t start = std::max<std::int64_t>(0, k_);
  const std::int64_t settle = std::max<std::int64_t>(
      static_cast<std::int64_t>(tgt_.pre().size()),
      static_cast<std::int64_t>(src_.pre().size()) + k_);
  const std::int64_t cycle =
      std::lcm<std::int64_t>(tgt_.per().size(), src_.per().size());
  for (std::int64_t a = start; a <= std::max(start, settle) + cycle; ++a) {
    if (tgt_.tail(a) == src_.tail(a - k_)) return;
  }
  fail(errc::precondition, "no common tail: not a groupoid element");
}

GroupoidElement gp_compose(const GroupoidElement& g1, const GroupoidElement& g2) {
  if (!(g1.src() == g2.tgt()))
    fail(errc::not_composable, "groupoid elements do not compose: middle mismatch");
  return GroupoidElement(g1.tgt(), g1.index() + g2.index(), g2.src());
}

GroupoidElement gp_inverse(const GroupoidElement& g) {
  return GroupoidElement(g.src(), -g.index(), g.tgt());
}

bool in_basic_open(const GroupoidElement& g, const Word& x, const Word& y) {
  require_same(x.alphabet(), y.alphabet());
  if (g.index() != static_cast<std::int64_t>(x.size()) - static_cast<std::int64_t>(y.size()))
    return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x.letter(k) != g.tgt().letter_at(k)) return false;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (y.letter(k) != g.src().letter_at(k)) return false;
  return g.tgt().tail(x.size()) == g.src().tail(y.size());
}

GroupoidElement germ_of_unit(const GroupElement& u, const EvPeriodicString& s) {
  const Symbol& f = u.repr().inner();
  require_same(f.alphabet(), s.alphabet());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Word& x = f.dom(i);
    bool match = true;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x.letter(k) != s.letter_at(k)) {
        match = false;
        break;
      }
    if (match) {
      EvPeriodicString image = s.tail(x.size()).prepended(f.out(i));
      std::int64_t k = static_cast<std::int64_t>(f.out(i).size()) -
                       static_cast<std::int64_t>(x.size());
      return GroupoidElement(image, k, s);
    }
  }
  // A unit's domain code is maximal, so some domain word always matches.
  fail(errc::precondition, "unit does not act on the stream");
}

std::string to_string(const EvPeriodicString& s) {
  std::string text;
  for (std::size_t i = 0; i < s.pre().size(); ++i)
    text.push_back(static_cast<char>('0' + s.pre().letter(i)));
  text.push_back('(');
  for (std::size_t i = 0; i < s.per().size(); ++i)
    text.push_back(static_cast<char>('0' + s.per().letter(i)));
  text.push_back(')');
  return text;
}

EvPeriodicString parse_stream(Alphabet a, const std::string& text) {
  std::size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    fail(errc::parse, "stream literal must be u(v)");
  std::string pre = text.substr(0, open);
  std::string per = text.substr(open + 1, text.size() - open - 2);
  Word u = pre.empty() ? Word::epsilon(a) : parse_word(a, pre);
  if (per.empty()) fail(errc::parse, "stream period must be nonempty");
  return EvPeriodicString(u, parse_word(a, per));
}

std::string to_string(const GroupoidElement& g) {
  return to_string(g.tgt()) + "|" + std::to_string(g.index()) + "|" + to_string(g.src());
}

GroupoidElement parse_groupoid(Alphabet a, const std::string& text) {
  std::string t = text;
  std::erase(t, ' ');
  std::size_t p1 = t.find('|');
  std::size_t p2 = t.rfind('|');
  if (p1 == std::string::npos || p1 == p2)
    fail(errc::parse, "groupoid literal must be tgt|k|src");
  std::int64_t k = 0;
  try {
    k = std::stoll(t.substr(p1 + 1, p2 - p1 - 1));
  } catch (const std::exception&) {
    fail(errc::parse, "invalid groupoid index");
  }
  return GroupoidElement(parse_stream(a, t.substr(0, p1)), k,
                         parse_stream(a, t.substr(p2 + 1)));
}

}  // namespace cuntz
