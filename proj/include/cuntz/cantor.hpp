#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cuntz/normal.hpp"

namespace cuntz {

// An element of the n-ary Cantor algebra T_n: a Lenz class with a total
// representative, i.e. a symbol whose domain is a maximal prefix code.
// Equality is equality of Lenz classes.
class TotalElement {
 public:
  explicit TotalElement(Symbol repr) : repr_(std::move(repr)) {
    if (!is_maximal_prefix_code(repr_.dom_code()))
      fail(errc::precondition, "total element requires a maximal prefix code domain");
  }

  static TotalElement identity(Alphabet a) { return TotalElement(Symbol::identity(a)); }

  const Symbol& symbol() const noexcept { return repr_; }
  StandardSymbol standard() const { return normalize(repr_); }
  Alphabet alphabet() const noexcept { return repr_.alphabet(); }

  friend bool operator==(const TotalElement& a, const TotalElement& b) {
    return lenz_equal(a.repr_, b.repr_);
  }

 private:
  Symbol repr_;
};

// An allowable lambda-expression over one generator: leaves carry the
// letter path applied to the generator, internal nodes are n-ary lambdas.
class CantorTerm {
 public:
  static CantorTerm leaf(Word path);
  static CantorTerm lambda(std::vector<CantorTerm> children);

  bool is_leaf() const noexcept;
  Alphabet alphabet() const noexcept;
  const Word& path() const;                        // leaf only
  const std::vector<CantorTerm>& children() const; // lambda only

 private:
  struct Node;
  explicit CantorTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// (f_1, ..., f_n)lambda: domain a_0.X_0 u ... u a_{n-1}.X_{n-1} with the
// outputs concatenated in order.
TotalElement lambda_op(std::span<const TotalElement> fs);

// f alpha_i: quotient the domain by a_i, or append a_i to the single output
// when the domain is {eps}.
TotalElement alpha_op(const TotalElement& f, int i);

TotalElement eval_term(const CantorTerm& t, const TotalElement& x);

// An allowable lambda-expression evaluating back to f at the identity
// generator, by alpha-decomposition along the domain code.
CantorTerm term_of(const TotalElement& f);

// The maximal prefix code of leaf addresses of a lambda-over-leaves term.
PrefixCode mpc_of_term(const CantorTerm& t);

std::string to_string(const CantorTerm& t);
CantorTerm parse_term(Alphabet a, const std::string& text);

}  // namespace cuntz
