#include "cuntz/thompson.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cuntz {

GroupElement g_mul(const GroupElement& a, const GroupElement& b) {
  return GroupElement(cn_mul(a.repr(), b.repr()));
}

GroupElement g_inv(const GroupElement& a) {
  return GroupElement(normalize(invert(a.repr().inner())));
}

bool g_eq(const GroupElement& a, const GroupElement& b) { return a == b; }

GroupElement g_pow(const GroupElement& a, std::int64_t k) {
  if (k < 0) return g_pow(g_inv(a), -k);
  GroupElement acc = GroupElement::identity(a.alphabet());
  GroupElement base = a;
  while (k > 0) {
    if (k & 1) acc = g_mul(acc, base);
    base = g_mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<std::int64_t> g_order(const GroupElement& a, std::int64_t cap) {
  if (cap < 1) fail(errc::precondition, "order cap must be at least 1");
  GroupElement id = GroupElement::identity(a.alphabet());
  GroupElement acc = a;
  for (std::int64_t k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = g_mul(acc, a);
  }
  return std::nullopt;
}

namespace {

// Random maximal prefix code with exactly `leaves` words; leaves must be
// attainable, i.e. congruent to 1 mod n-1.
PrefixCode random_mpc(Alphabet a, int leaves, std::mt19937_64& rng) {
  PrefixCode x(a, {Word::epsilon(a)});
  while (static_cast<int>(x.size()) < leaves) {
    std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
    x = caret_expand(x, pick(rng));
  }
  return x;
}

}  // namespace

GroupElement random_unit(Alphabet a, int size, std::uint64_t seed) {
  if (size < 1) fail(errc::precondition, "size must be at least 1");
  std::mt19937_64 rng(seed);
  const int step = a.arity() - 1;
  const int max_steps = (size - 1) / step;
  std::uniform_int_distribution<int> nsteps(0, max_steps);
  const int leaves = 1 + step * nsteps(rng);
  PrefixCode dom = random_mpc(a, leaves, rng);
  PrefixCode out = random_mpc(a, leaves, rng);
  std::vector<std::size_t> perm(leaves);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Word> y;
  y.reserve(leaves);
  for (std::size_t i = 0; i < static_cast<std::size_t>(leaves); ++i)
    y.push_back(out.word(perm[i]));
  return GroupElement(normalize(Symbol(dom, std::move(y))));
}

}  // namespace cuntz
