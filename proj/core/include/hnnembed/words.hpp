#pragma once

// Free-group word calculus over a named, ordered alphabet.
//
// Letters carry a sign bit rather than separate inverse symbols, so the
// alphabet order induces a total order on S^{+-}: generator index first,
// then +1 before -1. Every deterministic tie-break in the library uses it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hnnembed {

class Alphabet {
 public:
  Alphabet() = default;
  // Throws Error on duplicate or malformed names.
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::uint32_t> find(std::string_view name) const;
  // Like find(), but throws Error for unknown names.
  std::uint32_t index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
};

struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const noexcept { return Letter{gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool is_inverse_of(Letter other) const noexcept {
    return gen == other.gen && sign == -other.sign;
  }
  // Position in the total order on S^{+-}.
  constexpr std::uint32_t ordinal() const noexcept { return 2 * gen + (sign < 0 ? 1u : 0u); }
  static constexpr Letter from_ordinal(std::uint32_t ord) noexcept {
    return Letter{ord / 2, static_cast<std::int8_t>(ord % 2 == 0 ? 1 : -1)};
  }

  constexpr bool operator==(const Letter&) const = default;
  constexpr auto operator<=>(const Letter& other) const noexcept { return ordinal() <=> other.ordinal(); }
};

constexpr Letter gen(std::uint32_t g) noexcept { return Letter{g, 1}; }
constexpr Letter inv(std::uint32_t g) noexcept { return Letter{g, -1}; }

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  template <class It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  // Index taken modulo size(); the word is read as a cyclic word.
  Letter cyclic_at(std::size_t i) const { return letters_[i % letters_.size()]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void append(const Word& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }
  void reserve(std::size_t n) { letters_.reserve(n); }

  // Literal formal inverse: reversed, every sign flipped. No reduction.
  Word inverse() const;
  Word subword(std::size_t offset, std::size_t length) const;
  // Letters [offset, offset+length) of the cyclic word; length may not exceed size().
  Word cyclic_subword(std::size_t offset, std::size_t length) const;
  Word rotated(std::size_t offset) const;
  Word power(std::size_t n) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word& other) const { return letters_ <=> other.letters_; }

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }

 private:
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  Word core;
  Word conjugator;  // input = conjugator * core * conjugator^{-1} in the free group
};

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word free_reduce(const Word& w);
CyclicReduction cyclic_reduce(const Word& w);

// Largest n with w = u^n as a literal letter sequence. Throws on the empty word.
std::size_t exponent(const Word& w);
// Length of the shortest u with w = u^{|w|/|u|}; 0 for the empty word.
std::size_t primitive_period(const Word& w);

std::vector<Word> cyclic_rotations(const Word& w);
// True iff v is a rotation of u.
bool cyclically_equal(const Word& u, const Word& v);
// True iff v is a rotation of u or of u^{-1}.
bool cyclically_equal_up_to_inversion(const Word& u, const Word& v);

// Number of letters of w whose generator is in `gens` (by generator index).
std::size_t count_letters(const Word& w, std::span<const std::uint32_t> gens);

struct DigramCoverage {
  bool verdict = false;
  std::vector<Word> missing;  // ordered by (first, second) letter ordinal
};

// Every reduced two-letter word over the alphabet, ordered lexicographically
// by letter ordinal. There are 2n(2n-1) of them.
std::vector<Word> reduced_digrams(const Alphabet& alphabet);

// Checks that every reduced digram pq occurs as a (linear) subword of w.
// Requires w cyclically reduced and |alphabet| >= 2.
DigramCoverage contains_all_reduced_digrams(const Word& w, const Alphabet& alphabet);

// Closed Eulerian circuit in the digram graph (vertices S^{+-}, an edge p->q
// per reduced pq), listed as its vertex sequence. Length 2n(2n-1)+1.
Word eulerian_digram_word(const Alphabet& alphabet);

}  // namespace hnnembed
