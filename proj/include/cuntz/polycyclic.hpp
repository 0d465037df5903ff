#pragma once

#include <span>
#include <string>

#include "cuntz/words.hpp"

namespace cuntz {

// Element of the polycyclic inverse monoid P_n: either zero or the partial
// bijection in.u -> out.u between principal right ideals.  (eps, eps) is the
// identity.
class PnElement {
 public:
  static PnElement zero(Alphabet a) { return PnElement(a); }
  static PnElement identity(Alphabet a) {
    return PnElement(Word::epsilon(a), Word::epsilon(a));
  }

  PnElement(Word out, Word in) : out_(std::move(out)), in_(std::move(in)) {
    require_same(out_.alphabet(), in_.alphabet());
  }

  bool is_zero() const noexcept { return zero_; }
  Alphabet alphabet() const noexcept { return out_.alphabet(); }

  // Valid only when non-zero.
  const Word& out() const {
    if (zero_) fail(errc::precondition, "zero has no word components");
    return out_;
  }
  const Word& in() const {
    if (zero_) fail(errc::precondition, "zero has no word components");
    return in_;
  }

  friend bool operator==(const PnElement& a, const PnElement& b) {
    if (a.zero_ != b.zero_) return false;
    if (a.zero_) return a.alphabet() == b.alphabet();
    return a.out_ == b.out_ && a.in_ == b.in_;
  }

 private:
  explicit PnElement(Alphabet a) : out_(a), in_(a), zero_(true) {}

  Word out_, in_;
  bool zero_ = false;
};

// Product "g first, then f", following the prefix-based formula: for
// f = x.y^-1 and g = u.v^-1 the composite is (x.s).v^-1 when u = y.s and
// x.(v.t)^-1 when y = u.t, otherwise zero.
PnElement pn_mul(const PnElement& f, const PnElement& g);

PnElement pn_inv(const PnElement& f);

// f <= g in the natural partial order: f = zero or f = (u.p, v.p) with
// g = (u, v).
bool pn_leq(const PnElement& f, const PnElement& g);

bool pn_idempotent(const PnElement& f);

// f^-1 g and f g^-1 both idempotent (zero counts).
bool pn_compatible(const PnElement& f, const PnElement& g);

// Disjoint domains and disjoint ranges.
bool pn_orthogonal(const PnElement& f, const PnElement& g);

// C sits inside x.A*; true iff the quotients {p : x.p in C} max-reduce to a
// maximal prefix code.
bool is_tight_cover(std::span<const Word> cover, const Word& x);

std::string to_string(const PnElement& f);
PnElement parse_pn(Alphabet a, const std::string& text);

}  // namespace cuntz
