#pragma once

#include <random>

#include "cuntz/cantor.hpp"
#include "cuntz/streams.hpp"
#include "cuntz/symbols.hpp"

namespace cuntz {

// Deterministic generators used by the selftest and the property suites.

Word random_word(Alphabet a, std::size_t max_len, std::mt19937_64& rng);

// Random prefix code grown by caret expansions from {eps}; with drops > 0 a
// few leaves are removed, so the result need not be maximal.
PrefixCode random_prefix_code(Alphabet a, int max_leaves, int drops, std::mt19937_64& rng);

// Random M_n symbol: random (possibly non-maximal) domain code with random
// outputs of length at most max_out_len.
Symbol random_symbol(Alphabet a, int max_leaves, std::size_t max_out_len, std::mt19937_64& rng);

// Random injective symbol (an element of D_n).
Symbol random_injective_symbol(Alphabet a, int max_leaves, std::mt19937_64& rng);

// Random idempotent standard symbol with words of length <= max_len.
StandardSymbol random_idempotent(Alphabet a, std::size_t max_len, std::mt19937_64& rng);

// Random total element of T_n.
TotalElement random_total(Alphabet a, int max_leaves, std::size_t max_out_len, std::mt19937_64& rng);

// Random allowable lambda-term of bounded depth.
CantorTerm random_term(Alphabet a, int depth, std::mt19937_64& rng);

// Random canonical eventually periodic stream with |pre|, |per| <= max_len.
EvPeriodicString random_stream(Alphabet a, std::size_t max_len, std::mt19937_64& rng);

}  // namespace cuntz
