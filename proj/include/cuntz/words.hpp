#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuntz/errors.hpp"

namespace cuntz {

// A finite alphabet {0, ..., n-1} with 2 <= n <= 10.  The upper bound keeps
// single-digit rendering unambiguous.
class Alphabet {
 public:
  explicit Alphabet(int n) : n_(n) {
    if (n < 2 || n > 10) fail(errc::precondition, "alphabet arity must satisfy 2 <= n <= 10");
  }

  int arity() const noexcept { return n_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  int n_;
};

inline void require_same(Alphabet a, Alphabet b) {
  if (!(a == b)) fail(errc::alphabet_mismatch, "operands use different alphabets");
}

// Finite string over an alphabet.  Immutable after construction.
class Word {
 public:
  explicit Word(Alphabet a) : alph_(a) {}

  Word(Alphabet a, std::vector<uint8_t> letters) : alph_(a), letters_(std::move(letters)) {
    for (uint8_t c : letters_)
      if (c >= alph_.arity()) fail(errc::precondition, "letter out of alphabet range");
  }

  static Word epsilon(Alphabet a) { return Word(a); }

  Alphabet alphabet() const noexcept { return alph_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int letter(std::size_t i) const { return letters_.at(i); }
  const std::vector<uint8_t>& letters() const noexcept { return letters_; }

  Word append(int letter) const {
    Word w = *this;
    if (letter < 0 || letter >= alph_.arity()) fail(errc::precondition, "letter out of alphabet range");
    w.letters_.push_back(static_cast<uint8_t>(letter));
    return w;
  }

  Word concat(const Word& rhs) const {
    require_same(alph_, rhs.alph_);
    Word w = *this;
    w.letters_.insert(w.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return w;
  }

  // Letters from position `from` (inclusive) to the end.
  Word suffix(std::size_t from) const {
    if (from > size()) fail(errc::index_out_of_range, "suffix start past end of word");
    return Word(alph_, std::vector<uint8_t>(letters_.begin() + from, letters_.end()));
  }

  Word prefix(std::size_t len) const {
    if (len > size()) fail(errc::index_out_of_range, "prefix length past end of word");
    return Word(alph_, std::vector<uint8_t>(letters_.begin(), letters_.begin() + len));
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alph_ == b.alph_ && a.letters_ == b.letters_;
  }

  // Lexicographic; shorter-prefix-first.  Within a prefix code this is the
  // left-to-right leaf order of the tree.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  Alphabet alph_;
  std::vector<uint8_t> letters_;
};

bool is_prefix(const Word& p, const Word& w);
bool prefix_comparable(const Word& x, const Word& y);

// w = p.u  ->  u; nullopt when p is not a prefix of w.
std::optional<Word> strip_prefix(const Word& p, const Word& w);

std::string to_string(const Word& w);
Word parse_word(Alphabet a, const std::string& text);

// Ordered list of pairwise prefix-incomparable words.  The empty list is the
// empty prefix code.
class PrefixCode {
 public:
  explicit PrefixCode(Alphabet a) : alph_(a) {}
  PrefixCode(Alphabet a, std::vector<Word> words);

  Alphabet alphabet() const noexcept { return alph_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const Word& word(std::size_t i) const { return words_.at(i); }
  const std::vector<Word>& words() const noexcept { return words_; }

  // Sorted copy, for canonical comparison.
  PrefixCode sorted() const;

  friend bool operator==(const PrefixCode& a, const PrefixCode& b) {
    return a.alph_ == b.alph_ && a.words_ == b.words_;
  }

 private:
  Alphabet alph_;
  std::vector<Word> words_;
};

bool is_prefix_code(std::span<const Word> words);

// The prefix-minimal elements of X, deduplicated, in first-occurrence order.
// Generates the same right ideal as X.
PrefixCode max_reduce(Alphabet a, std::span<const Word> words);

// Decided by the finite-depth criterion; Kraft equality is asserted as a
// cross-check.  The empty code is not maximal.
bool is_maximal_prefix_code(const PrefixCode& x);

PrefixCode caret_expand(const PrefixCode& x, std::size_t at);

// Replaces stem.0, ..., stem.(n-1) by stem at the position of stem.0.
PrefixCode caret_reduce(const PrefixCode& x, const Word& stem);

// All maximal prefix codes with at most max_leaves words, by breadth-first
// caret expansion from {eps}.  Returned in a deterministic canonical order.
std::vector<PrefixCode> enumerate_mpc(Alphabet a, int max_leaves,
                                      std::size_t cap = 1u << 22);

// The unique maximal prefix code all of whose words have length r.
PrefixCode uniform_mpc(Alphabet a, int height, std::size_t cap = 1u << 20);

// { y : a.y in X }, order inherited from X.
PrefixCode quotient(int letter, const PrefixCode& x);

// { a.x : x in X }, order preserved.
PrefixCode prepend(int letter, const PrefixCode& x);

// True iff X is obtainable from Y by caret expansions.
bool refines(const PrefixCode& x, const PrefixCode& y);

std::string to_string(const PrefixCode& x);
PrefixCode parse_prefix_code(Alphabet a, const std::string& text);

}  // namespace cuntz
