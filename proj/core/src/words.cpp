#include "hnnembed/words.hpp"

#include <algorithm>
#include <unordered_set>

#include "hnnembed/error.hpp"

namespace hnnembed {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw Error("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate generator name '" + n + "'");
  }
}

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::uint32_t Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown generator '" + std::string(name) + "'");
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

Word Word::subword(std::size_t offset, std::size_t length) const {
  if (offset > size() || length > size() - offset) throw Error("subword out of range");
  return Word(letters_.begin() + static_cast<std::ptrdiff_t>(offset),
              letters_.begin() + static_cast<std::ptrdiff_t>(offset + length));
}

Word Word::cyclic_subword(std::size_t offset, std::size_t length) const {
  if (length > size()) throw Error("cyclic subword longer than word");
  Word out;
  out.letters_.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.letters_.push_back(cyclic_at(offset + i));
  return out;
}

Word Word::rotated(std::size_t offset) const {
  if (empty()) return {};
  return cyclic_subword(offset % size(), size());
}

Word Word::power(std::size_t n) const {
  Word out;
  out.letters_.reserve(size() * n);
  for (std::size_t i = 0; i < n; ++i) out.append(*this);
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].is_inverse_of(w[i - 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || !w.front().is_inverse_of(w.back());
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo].is_inverse_of(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return {r.subword(lo, hi - lo), r.subword(0, lo)};
}

std::size_t primitive_period(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  // KMP failure function; the shortest period p = n - fail[n-1] gives a
  // power decomposition only when it divides n.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && !(w[i] == w[k])) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  const std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

std::size_t exponent(const Word& w) {
  if (w.empty()) throw Error("exponent undefined on empty word");
  return w.size() / primitive_period(w);
}

std::vector<Word> cyclic_rotations(const Word& w) {
  if (w.empty()) return {Word{}};
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(w.rotated(k));
  return out;
}

bool cyclically_equal(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  const std::size_t n = u.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = 0;
    while (i < n && u.cyclic_at(k + i) == v[i]) ++i;
    if (i == n) return true;
  }
  return false;
}

bool cyclically_equal_up_to_inversion(const Word& u, const Word& v) {
  return cyclically_equal(u, v) || cyclically_equal(u.inverse(), v);
}

std::size_t count_letters(const Word& w, std::span<const std::uint32_t> gens) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](Letter l) {
    return std::find(gens.begin(), gens.end(), l.gen) != gens.end();
  }));
}

std::vector<Word> reduced_digrams(const Alphabet& alphabet) {
  const auto letters = static_cast<std::uint32_t>(2 * alphabet.size());
  std::vector<Word> out;
  for (std::uint32_t p = 0; p < letters; ++p)
    for (std::uint32_t q = 0; q < letters; ++q) {
      Letter a = Letter::from_ordinal(p), b = Letter::from_ordinal(q);
      if (!a.is_inverse_of(b)) out.push_back(Word{a, b});
    }
  return out;
}

DigramCoverage contains_all_reduced_digrams(const Word& w, const Alphabet& alphabet) {
  if (alphabet.size() < 2) throw Error("digram coverage needs at least two generators");
  if (!is_cyclically_reduced(w)) throw Error("digram coverage requires a cyclically reduced word");
  const std::size_t letters = 2 * alphabet.size();
  std::vector<bool> seen(letters * letters, false);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1].gen >= alphabet.size() || w[i].gen >= alphabet.size())
      throw Error("word uses a generator outside the alphabet");
    seen[w[i - 1].ordinal() * letters + w[i].ordinal()] = true;
  }
  DigramCoverage out;
  for (auto& d : reduced_digrams(alphabet))
    if (!seen[d[0].ordinal() * letters + d[1].ordinal()]) out.missing.push_back(std::move(d));
  out.verdict = out.missing.empty();
  return out;
}

Word eulerian_digram_word(const Alphabet& alphabet) {
  if (alphabet.size() < 2) throw Error("digram graph not Eulerian for rank < 2");
  const auto letters = static_cast<std::uint32_t>(2 * alphabet.size());

  // next_edge[v] walks v's out-neighbours in ordinal order, skipping v^{-1}.
  std::vector<std::uint32_t> next_edge(letters, 0);
  auto take_edge = [&](std::uint32_t v) -> std::optional<std::uint32_t> {
    const Letter lv = Letter::from_ordinal(v);
    while (next_edge[v] < letters) {
      std::uint32_t q = next_edge[v]++;
      if (!lv.is_inverse_of(Letter::from_ordinal(q))) return q;
    }
    return std::nullopt;
  };

  // Hierholzer, iterative.
  std::vector<std::uint32_t> stack{0};
  std::vector<std::uint32_t> circuit;
  while (!stack.empty()) {
    if (auto q = take_edge(stack.back())) {
      stack.push_back(*q);
    } else {
      circuit.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  Word out;
  out.reserve(circuit.size());
  for (auto v : circuit) out.push_back(Letter::from_ordinal(v));
  return out;
}

}  // namespace hnnembed
