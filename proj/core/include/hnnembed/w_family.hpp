#pragma once

// Seeded families of long words in two generators that pass C'(1/7).
//
// Candidates are pseudo-random cyclically reduced words; the exact checker is
// the gate. A failed attempt doubles the length and draws again, so the
// output depends only on (count, generators, options).

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hnnembed/words.hpp"

namespace hnnembed {

using Rng = std::mt19937_64;

// Uniform draw in [0, bound); identical on every standard library.
std::size_t draw_below(Rng& rng, std::size_t bound);

struct WordShape {
  std::vector<Letter> forbidden_first;
  std::vector<Letter> forbidden_last;
  bool cyclically_reduced = false;
};

// Reduced word of exactly `length` letters drawn from `letters`.
Word random_reduced_word(Rng& rng, std::span<const Letter> letters, std::size_t length, const WordShape& shape = {});

// The four signed letters of two generators, in letter order.
std::vector<Letter> signed_letters(std::span<const std::uint32_t> generators);

struct WFamilyOptions {
  std::uint64_t seed = 0;
  std::size_t initial_length = 64;
  std::size_t max_escalations = 16;
};

struct WFamily {
  std::vector<Word> words;
  std::size_t length = 0;       // length of each word in the accepted attempt
  std::size_t escalations = 0;  // doublings before acceptance
};

// Words over generators g1, g2 of `alphabet` such that the presentation
// <alphabet | words> is C'(1/7), no word is a proper power, the words are
// pairwise distinct up to rotation and inversion, and each uses both
// generators. Throws Error("generator exhausted") past max_escalations.
WFamily generate_w_family(std::size_t count, const Alphabet& alphabet, std::uint32_t g1, std::uint32_t g2,
                          const WFamilyOptions& options = {});

// Shared acceptance test for candidate families.
bool w_family_acceptable(const Alphabet& alphabet, const std::vector<Word>& words);

}  // namespace hnnembed
