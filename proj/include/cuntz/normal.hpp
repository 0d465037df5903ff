#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cuntz/polycyclic.hpp"
#include "cuntz/symbols.hpp"

namespace cuntz {

class StandardSymbol;
StandardSymbol normalize(const Symbol& f);

// A symbol in Lenz normal form: lexicographically sorted pairs, no deletable
// caret left.  Canonical representative of its Lenz class, hence of an
// element of the Cuntz inverse monoid C_n.  Built only through normalize.
class StandardSymbol {
 public:
  const Symbol& inner() const noexcept { return inner_; }
  Alphabet alphabet() const noexcept { return inner_.alphabet(); }

  static StandardSymbol identity(Alphabet a) { return normalize(Symbol::identity(a)); }
  static StandardSymbol zero(Alphabet a) { return normalize(Symbol::zero(a)); }

  friend bool operator==(const StandardSymbol& a, const StandardSymbol& b) {
    return a.inner_ == b.inner_;
  }

 private:
  explicit StandardSymbol(Symbol inner) : inner_(std::move(inner)) {}
  friend StandardSymbol normalize(const Symbol& f);

  Symbol inner_;
};

// Replaces the pair (x, y) at `at` by the n pairs (x.a_k, y.a_k).  The result
// is Lenz-equal to f and essential in it.
Symbol insert_caret(const Symbol& f, std::size_t at);

// Requires positions stem_index ... stem_index+n-1 to hold the pairs
// (x.a_0 : y.a_0) ... (x.a_{n-1} : y.a_{n-1}); replaces them by (x : y).
Symbol delete_caret(const Symbol& f, std::size_t stem_index);

// True iff a deletable caret starts at position `at`.
bool has_caret_at(const Symbol& f, std::size_t at);

// f and g induce the same map on right-infinite strings.
bool lenz_equal(const Symbol& f, const Symbol& g);

StandardSymbol cn_mul(const StandardSymbol& f, const StandardSymbol& g);
StandardSymbol cn_meet(const StandardSymbol& f, const StandardSymbol& g);
StandardSymbol cn_join(const StandardSymbol& f, const StandardSymbol& g);

// Requires an idempotent; the complementary idempotent in the Boolean algebra
// of projections of C_n.
StandardSymbol complement(const StandardSymbol& e);

bool is_idempotent(const StandardSymbol& f);

// X maximal and Y a maximal prefix code with distinct entries.
bool is_unit(const StandardSymbol& f);

// Instance check of the cover-to-join property: theta maps P_n into a Boolean
// inverse monoid whose elements are standard symbols, the letters' range
// projections join to 1, and `cover` is a tight cover of x.  Verifies
// theta(xx^-1) = join of theta(cc^-1) over the cover.
bool cover_to_join_check(
    const std::function<StandardSymbol(const PnElement&)>& theta, Alphabet a,
    const Word& x, std::span<const Word> cover);

// The canonical embedding P_n -> C_n.
StandardSymbol embed_pn(const PnElement& f);

}  // namespace cuntz
