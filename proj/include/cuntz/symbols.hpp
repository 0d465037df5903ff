#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuntz/words.hpp"

namespace cuntz {

// A symbol (X/Y): X a prefix code, Y an equal-length output list with
// multiplicities allowed.  Encodes the join of the partial maps x_i.u -> y_i.u,
// an element of the restriction monoid M_n (of D_n when Y is a prefix code
// with distinct entries).  X = {} is the zero of M_n.
class Symbol {
 public:
  explicit Symbol(Alphabet a) : alph_(a) {}  // zero
  Symbol(PrefixCode dom, std::vector<Word> out);

  static Symbol zero(Alphabet a) { return Symbol(a); }
  static Symbol identity(Alphabet a) {
    return Symbol(PrefixCode(a, {Word::epsilon(a)}), {Word::epsilon(a)});
  }

  Alphabet alphabet() const noexcept { return alph_; }
  std::size_t size() const noexcept { return dom_.size(); }
  bool is_zero() const noexcept { return dom_.empty(); }
  const Word& dom(std::size_t i) const { return dom_.at(i); }
  const Word& out(std::size_t i) const { return out_.at(i); }
  const std::vector<Word>& dom_words() const noexcept { return dom_; }
  const std::vector<Word>& out_words() const noexcept { return out_; }
  PrefixCode dom_code() const { return PrefixCode(alph_, dom_); }

  // Pairs sorted lexicographically by domain word.
  Symbol canon() const;

  // Longest word occurring on either side; 0 for zero.
  std::size_t max_word_length() const;

  // Positional, order-significant equality.
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.alph_ == b.alph_ && a.dom_ == b.dom_ && a.out_ == b.out_;
  }

 private:
  Alphabet alph_;
  std::vector<Word> dom_, out_;
};

// Pointwise action: w = x_i.u  ->  y_i.u, nullopt when no x_i is a prefix of
// w.  This is the brute-force oracle grounding the other operations.
std::optional<Word> act(const Symbol& f, const Word& w);

// Symbol of the composite "g first, then f", pairs sorted lexicographically
// by input word.
Symbol compose(const Symbol& f, const Symbol& g);

// The projection (X/X).
Symbol star(const Symbol& f);

// Y a prefix code with distinct entries, i.e. f lies in D_n.
bool is_injective(const Symbol& f);

// The symbol (Y/X); requires f in D_n.
Symbol invert(const Symbol& f);

// Least upper bound of two compatible symbols.
Symbol join(const Symbol& f, const Symbol& g);

// Largest symbol below both: refine to the common domain refinement and keep
// the cones on which the actions agree.
Symbol meet(const Symbol& f, const Symbol& g);

// f <= g iff f = g.f*.
bool leq(const Symbol& f, const Symbol& g);

// Both X and max_reduce(Y) are maximal prefix codes.
bool is_essential(const Symbol& f);

// Requires f <= g; domain of f refines domain of g.
bool essential_in(const Symbol& f, const Symbol& g);

// Agreement of the two actions on every string of exactly `depth` letters.
bool act_agree_at_depth(const Symbol& f, const Symbol& g, std::size_t depth);

// Default oracle depth: max word length in f and g, plus 2.
std::size_t oracle_depth(const Symbol& f, const Symbol& g);

std::string to_string(const Symbol& f);
Symbol parse_symbol(Alphabet a, const std::string& text);

}  // namespace cuntz
