#pragma once

#include <cstdint>
#include <optional>

#include "cuntz/normal.hpp"

namespace cuntz {

// An element of the Thompson group G_{n,1}, realized as a unit of C_n: a
// standard symbol whose domain and output are both maximal prefix codes with
// distinct output entries.
class GroupElement {
 public:
  explicit GroupElement(StandardSymbol repr) : repr_(std::move(repr)) {
    if (!is_unit(repr_)) fail(errc::precondition, "symbol is not a unit of C_n");
  }

  static GroupElement identity(Alphabet a) {
    return GroupElement(StandardSymbol::identity(a));
  }

  const StandardSymbol& repr() const noexcept { return repr_; }
  Alphabet alphabet() const noexcept { return repr_.alphabet(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.repr_ == b.repr_;
  }

 private:
  StandardSymbol repr_;
};

GroupElement g_mul(const GroupElement& a, const GroupElement& b);
GroupElement g_inv(const GroupElement& a);
bool g_eq(const GroupElement& a, const GroupElement& b);
GroupElement g_pow(const GroupElement& a, std::int64_t k);

// Least k in [1, cap] with a^k = 1; nullopt when the order exceeds cap.
std::optional<std::int64_t> g_order(const GroupElement& a, std::int64_t cap = 4096);

// Deterministic pseudo-random unit on at most `size` leaves.
GroupElement random_unit(Alphabet a, int size, std::uint64_t seed);

}  // namespace cuntz
