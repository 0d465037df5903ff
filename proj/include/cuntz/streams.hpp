#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cuntz/symbols.hpp"
#include "cuntz/thompson.hpp"

namespace cuntz {

// The right-infinite string u.v.v.v... in canonical form: v primitive and u
// shortest.  Equality of represented streams is equality of canonical forms.
class EvPeriodicString {
 public:
  EvPeriodicString(Word pre, Word per);

  const Word& pre() const noexcept { return pre_; }
  const Word& per() const noexcept { return per_; }
  Alphabet alphabet() const noexcept { return pre_.alphabet(); }

  int letter_at(std::size_t i) const;
  Word prefix(std::size_t len) const;

  // The stream with the first k letters removed.
  EvPeriodicString tail(std::size_t k) const;

  // x followed by this stream.
  EvPeriodicString prepended(const Word& x) const;

  friend bool operator==(const EvPeriodicString& a, const EvPeriodicString& b) {
    return a.pre_ == b.pre_ && a.per_ == b.per_;
  }

 private:
  Word pre_, per_;
};

EvPeriodicString eps_normalize(const Word& pre, const Word& per);

// Apply a symbol: replace the matched domain prefix by its output, or
// nullopt when no domain word is a prefix of the stream.
std::optional<EvPeriodicString> eps_apply(const Symbol& f, const EvPeriodicString& s);

// Element (tgt, k, src) of the groupoid G_n: tgt = x.w and src = y.w for some
// finite x, y and stream w with k = |x| - |y|.  Validity is checked at
// construction.
class GroupoidElement {
 public:
  GroupoidElement(EvPeriodicString tgt, std::int64_t k, EvPeriodicString src);

  static GroupoidElement unit(const EvPeriodicString& s) { return GroupoidElement(s, 0, s); }

  const EvPeriodicString& tgt() const noexcept { return tgt_; }
  const EvPeriodicString& src() const noexcept { return src_; }
  std::int64_t index() const noexcept { return k_; }

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.tgt_ == b.tgt_ && a.k_ == b.k_ && a.src_ == b.src_;
  }

 private:
  EvPeriodicString tgt_, src_;
  std::int64_t k_;
};

// (z, k, z')(z', k', z'') = (z, k + k', z'').
GroupoidElement gp_compose(const GroupoidElement& g1, const GroupoidElement& g2);

// (z, k, z')^-1 = (z', -k, z).
GroupoidElement gp_inverse(const GroupoidElement& g);

// Membership in the basic open set U_{x,y}: index |x| - |y|, prefixes match
// and the two tails coincide.
bool in_basic_open(const GroupoidElement& g, const Word& x, const Word& y);

// The germ of a unit at a stream: (u(s), |y| - |x|, s) where (x -> y) is the
// pair of u matched by s.
GroupoidElement germ_of_unit(const GroupElement& u, const EvPeriodicString& s);

std::string to_string(const EvPeriodicString& s);
EvPeriodicString parse_stream(Alphabet a, const std::string& text);

std::string to_string(const GroupoidElement& g);
GroupoidElement parse_groupoid(Alphabet a, const std::string& text);

}  // namespace cuntz
