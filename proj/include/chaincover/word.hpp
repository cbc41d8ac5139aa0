#pragma once

#include <cstdint>
#include <vector>

namespace chaincover {

// A word over free-group generators. Letters are nonzero signed generator
// indices: +k is generator k, -k its inverse. Generators are 1-based.
using Word = std::vector<std::int32_t>;

// Removes adjacent inverse pairs until none remain. Idempotent.
Word free_reduce(const Word& w);

// Appends one letter to an already-reduced word, cancelling if possible.
void push_reduced(Word& w, std::int32_t letter);

// Appends a whole word to an already-reduced word, keeping it reduced.
void append_reduced(Word& w, const Word& suffix);

Word inverse(const Word& w);

// Freely reduced concatenation of two words.
Word concat_reduced(const Word& a, const Word& b);

// Cyclically reduces a freely reduced word (strips matching inverse ends).
Word cyclic_reduce(const Word& w);

// Shortlex order: by length first, then letter-wise with |g| ascending and
// the positive letter before the negative one.
bool shortlex_less(const Word& a, const Word& b);

// Lexicographically least among all cyclic rotations of w and of its
// inverse. Canonical key for relator deduplication.
Word cyclic_canonical(const Word& w);

}  // namespace chaincover
