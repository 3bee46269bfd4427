#include "hnnembed/w_family.hpp"

#include <algorithm>

#include "hnnembed/error.hpp"
#include "hnnembed/presentation.hpp"

namespace hnnembed {

std::size_t draw_below(Rng& rng, std::size_t bound) {
  if (bound == 0) throw Error("draw_below(0)");
  return static_cast<std::size_t>(rng() % bound);
}

std::vector<Letter> signed_letters(std::span<const std::uint32_t> generators) {
  std::vector<Letter> out;
  for (auto g : generators) {
    out.push_back(gen(g));
    out.push_back(inv(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word random_reduced_word(Rng& rng, std::span<const Letter> letters, std::size_t length, const WordShape& shape) {
  if (length == 0) return {};
  auto contains = [](const std::vector<Letter>& v, Letter l) { return std::find(v.begin(), v.end(), l) != v.end(); };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Word w;
    w.reserve(length);
    bool stuck = false;
    for (std::size_t i = 0; i < length && !stuck; ++i) {
      std::vector<Letter> options;
      for (Letter l : letters) {
        if (i == 0 && contains(shape.forbidden_first, l)) continue;
        if (i > 0 && l.is_inverse_of(w.back())) continue;
        if (i + 1 == length) {
          if (contains(shape.forbidden_last, l)) continue;
          if (shape.cyclically_reduced && length > 1 && l.is_inverse_of(w.front())) continue;
        }
        options.push_back(l);
      }
      if (options.empty()) {
        stuck = true;
      } else {
        w.push_back(options[draw_below(rng, options.size())]);
      }
    }
    if (!stuck) return w;
  }
  throw Error("no reduced word satisfies the requested shape");
}

bool w_family_acceptable(const Alphabet& alphabet, const std::vector<Word>& words) {
  for (const Word& w : words)
    if (w.empty() || !is_cyclically_reduced(w) || is_proper_power(w)) return false;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (cyclically_equal_up_to_inversion(words[i], words[j])) return false;
  return check_Cprime(Presentation(alphabet, words), 1, 7).verdict;
}

WFamily generate_w_family(std::size_t count, const Alphabet& alphabet, std::uint32_t g1, std::uint32_t g2,
                          const WFamilyOptions& options) {
  if (count == 0) throw Error("W family needs count >= 1");
  if (g1 == g2 || g1 >= alphabet.size() || g2 >= alphabet.size()) throw Error("W family needs two distinct generators");
  const std::uint32_t gens[] = {g1, g2};
  const auto letters = signed_letters(gens);

  std::size_t length = options.initial_length;
  for (std::size_t escalation = 0; escalation <= options.max_escalations; ++escalation, length *= 2) {
    Rng rng(options.seed * 0x9E3779B97F4A7C15ull + escalation);
    std::vector<Word> words;
    for (std::size_t i = 0; i < count; ++i)
      words.push_back(random_reduced_word(rng, letters, length, {{}, {}, true}));
    const bool both_generators = std::all_of(words.begin(), words.end(), [&](const Word& w) {
      return count_letters(w, std::span(gens, 1)) > 0 && count_letters(w, std::span(gens + 1, 1)) > 0;
    });
    if (both_generators && w_family_acceptable(alphabet, words)) return {std::move(words), length, escalation};
  }
  throw Error("generator exhausted");
}

}  // namespace hnnembed
