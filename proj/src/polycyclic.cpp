#include "cuntz/polycyclic.hpp"

namespace cuntz {

PnElement pn_mul(const PnElement& f, const PnElement& g) {
  require_same(f.alphabet(), g.alphabet());
  if (f.is_zero() || g.is_zero()) return PnElement::zero(f.alphabet());
  // f = x.y^-1, g = u.v^-1.
  const Word& x = f.out();
  const Word& y = f.in();
  const Word& u = g.out();
  const Word& v = g.in();
  if (auto s = strip_prefix(y, u)) return PnElement(x.concat(*s), v);
  if (auto t = strip_prefix(u, y)) return PnElement(x, v.concat(*t));
  return PnElement::zero(f.alphabet());
}

PnElement pn_inv(const PnElement& f) {
  if (f.is_zero()) return f;
  return PnElement(f.in(), f.out());
}

bool pn_leq(const PnElement& f, const PnElement& g) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  auto p = strip_prefix(g.out(), f.out());
  auto q = strip_prefix(g.in(), f.in());
  return p && q && *p == *q;
}

bool pn_idempotent(const PnElement& f) {
  return f.is_zero() || f.out() == f.in();
}

bool pn_compatible(const PnElement& f, const PnElement& g) {
  return pn_idempotent(pn_mul(pn_inv(f), g)) && pn_idempotent(pn_mul(f, pn_inv(g)));
}

bool pn_orthogonal(const PnElement& f, const PnElement& g) {
  auto domain = [](const PnElement& h) { return pn_mul(pn_inv(h), h); };
  auto range = [](const PnElement& h) { return pn_mul(h, pn_inv(h)); };
  return pn_mul(domain(f), domain(g)).is_zero() && pn_mul(range(f), range(g)).is_zero();
}

bool is_tight_cover(std::span<const Word> cover, const Word& x) {
  std::vector<Word> tails;
  for (const Word& c : cover) {
    auto t = strip_prefix(x, c);
    if (!t) fail(errc::precondition, "cover element does not extend the covered word");
    tails.push_back(*t);
  }
  if (tails.empty()) return false;
  return is_maximal_prefix_code(max_reduce(x.alphabet(), tails));
}

std::string to_string(const PnElement& f) {
  if (f.is_zero()) return "ZERO";
  return to_string(f.out()) + ":" + to_string(f.in());
}

PnElement parse_pn(Alphabet a, const std::string& text) {
  if (text == "ZERO") return PnElement::zero(a);
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) fail(errc::parse, "P_n literal must be 'out:in' or 'ZERO'");
  return PnElement(parse_word(a, text.substr(0, colon)), parse_word(a, text.substr(colon + 1)));
}

}  // namespace cuntz
