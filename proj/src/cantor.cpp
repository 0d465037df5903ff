#include "cuntz/cantor.hpp"

#include <algorithm>

namespace cuntz {

struct CantorTerm::Node {
  // Leaf when children is empty; path is meaningful only then.
  Word path;
  std::vector<CantorTerm> children;

  explicit Node(Word p) : path(std::move(p)) {}
  explicit Node(std::vector<CantorTerm> cs) : path(cs.at(0).alphabet()), children(std::move(cs)) {}
};

CantorTerm CantorTerm::leaf(Word path) {
  return CantorTerm(std::make_shared<const Node>(std::move(path)));
}

CantorTerm CantorTerm::lambda(std::vector<CantorTerm> children) {
  if (children.empty()) fail(errc::precondition, "lambda needs children");
  Alphabet a = children[0].alphabet();
  if (children.size() != static_cast<std::size_t>(a.arity()))
    fail(errc::precondition, "lambda arity must equal the alphabet arity");
  for (const CantorTerm& c : children) require_same(a, c.alphabet());
  return CantorTerm(std::make_shared<const Node>(std::move(children)));
}

bool CantorTerm::is_leaf() const noexcept { return node_->children.empty(); }
Alphabet CantorTerm::alphabet() const noexcept { return node_->path.alphabet(); }

const Word& CantorTerm::path() const {
  if (!is_leaf()) fail(errc::precondition, "path() on a lambda node");
  return node_->path;
}

const std::vector<CantorTerm>& CantorTerm::children() const {
  if (is_leaf()) fail(errc::precondition, "children() on a leaf");
  return node_->children;
}

TotalElement lambda_op(std::span<const TotalElement> fs) {
  if (fs.empty()) fail(errc::precondition, "lambda_op needs arguments");
  Alphabet a = fs[0].alphabet();
  if (fs.size() != static_cast<std::size_t>(a.arity()))
    fail(errc::precondition, "lambda_op arity must equal the alphabet arity");
  std::vector<Word> d, o;
  for (int i = 0; i < a.arity(); ++i) {
    require_same(a, fs[i].alphabet());
    const Symbol& s = fs[i].symbol();
    for (std::size_t k = 0; k < s.size(); ++k) {
      d.push_back(Word::epsilon(a).append(i).concat(s.dom(k)));
      o.push_back(s.out(k));
    }
  }
  return TotalElement(Symbol(PrefixCode(a, std::move(d)), std::move(o)));
}

TotalElement alpha_op(const TotalElement& f, int i) {
  Alphabet a = f.alphabet();
  if (i < 0 || i >= a.arity()) fail(errc::index_out_of_range, "alpha index out of range");
  const Symbol& s = f.symbol();
  if (s.size() == 1 && s.dom(0).empty())
    return TotalElement(Symbol(s.dom_code(), {s.out(0).append(i)}));
  std::vector<Word> d, o;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!s.dom(k).empty() && s.dom(k).letter(0) == i) {
      d.push_back(s.dom(k).suffix(1));
      o.push_back(s.out(k));
    }
  }
  return TotalElement(Symbol(PrefixCode(a, std::move(d)), std::move(o)));
}

TotalElement eval_term(const CantorTerm& t, const TotalElement& x) {
  require_same(t.alphabet(), x.alphabet());
  if (t.is_leaf()) {
    TotalElement r = x;
    for (std::size_t k = 0; k < t.path().size(); ++k) r = alpha_op(r, t.path().letter(k));
    return r;
  }
  std::vector<TotalElement> vals;
  vals.reserve(t.children().size());
  for (const CantorTerm& c : t.children()) vals.push_back(eval_term(c, x));
  return lambda_op(vals);
}

CantorTerm term_of(const TotalElement& f) {
  const Symbol& s = f.symbol();
  if (s.size() == 1 && s.dom(0).empty()) return CantorTerm::leaf(s.out(0));
  std::vector<CantorTerm> children;
  children.reserve(f.alphabet().arity());
  for (int i = 0; i < f.alphabet().arity(); ++i) children.push_back(term_of(alpha_op(f, i)));
  return CantorTerm::lambda(std::move(children));
}

PrefixCode mpc_of_term(const CantorTerm& t) {
  Alphabet a = t.alphabet();
  if (t.is_leaf()) return PrefixCode(a, {Word::epsilon(a)});
  std::vector<Word> ws;
  for (int i = 0; i < a.arity(); ++i) {
    PrefixCode child = mpc_of_term(t.children()[i]);
    for (const Word& w : child.words()) ws.push_back(Word::epsilon(a).append(i).concat(w));
  }
  return PrefixCode(a, std::move(ws));
}

std::string to_string(const CantorTerm& t) {
  if (t.is_leaf()) {
    std::string s = "X";
    for (std::size_t k = t.path().size(); k > 0; --k) {
      s = "a" + std::to_string(t.path().letter(k - 1)) + "(" + s + ")";
    }
    return s;
  }
  std::string s = "L(";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) s += ",";
    s += to_string(t.children()[i]);
  }
  return s + ")";
}

namespace {

struct TermParser {
  Alphabet a;
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(errc::parse, std::string("expected '") + c + "' in term");
    ++pos;
  }

  CantorTerm parse() {
    skip_ws();
    if (pos >= text.size()) fail(errc::parse, "unexpected end of term");
    char c = text[pos];
    if (c == 'X') {
      ++pos;
      return CantorTerm::leaf(Word::epsilon(a));
    }
    if (c == 'L') {
      ++pos;
      expect('(');
      std::vector<CantorTerm> children;
      children.push_back(parse());
      while (true) {
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          children.push_back(parse());
        } else {
          break;
        }
      }
      expect(')');
      return CantorTerm::lambda(std::move(children));
    }
    if (c == 'a') {
      ++pos;
      if (pos >= text.size() || text[pos] < '0' || text[pos] >= '0' + a.arity())
        fail(errc::parse, "alpha index out of alphabet range");
      int letter = text[pos] - '0';
      ++pos;
      expect('(');
      CantorTerm inner = parse();
      expect(')');
      // The written alpha chain spells the path outermost-first; an alpha
      // applied to a lambda selects its child (law CA2), evaluated eagerly.
      if (inner.is_leaf())
        return CantorTerm::leaf(Word::epsilon(a).append(letter).concat(inner.path()));
      return inner.children()[letter];
    }
    fail(errc::parse, std::string("unexpected character '") + c + "' in term");
  }
};

}  // namespace

CantorTerm parse_term(Alphabet a, const std::string& text) {
  TermParser p{a, text};
  CantorTerm t = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) fail(errc::parse, "trailing characters after term");
  return t;
}

}  // namespace cuntz
