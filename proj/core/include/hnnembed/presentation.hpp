#pragma once

// Group presentations and small-cancellation verdicts.
//
// A piece is a cyclic subword u with two *distinct appearances* in the
// symmetrized relator set. Occurrences in different relators, or in the
// same relator read in opposite orientations, are always distinct. Two
// occurrences in the same relator r = q^n and the same orientation are the
// same appearance exactly when their offsets agree modulo |q| (the Z_n
// action on a proper-power relator). A piece of r never exceeds |r|, nor the
// length of the relator supplying its second appearance.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnnembed/words.hpp"

namespace hnnembed {

enum class RelatorPolicy {
  cyclically_reduced,  // the usual presentation invariant
  literal,             // projected boundary words may carry backtracks
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(Alphabet alphabet, std::vector<Word> relators, std::vector<std::string> labels = {},
               RelatorPolicy policy = RelatorPolicy::cyclically_reduced);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const Word& relator(std::size_t i) const { return relators_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t size() const noexcept { return relators_.size(); }

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
  std::vector<std::string> labels_;
};

struct PieceOptions {
  // Off reproduces the literal "appearing in R" reading: only the relators
  // themselves (all rotations) are scanned, not their inverses.
  bool symmetrize_inverses = true;
};

// Position of a cyclic word inside the symmetrized relator set.
struct RotationRef {
  std::size_t relator = 0;
  std::size_t offset = 0;
  bool inverted = false;

  bool operator==(const RotationRef&) const = default;
  auto operator<=>(const RotationRef&) const = default;
};

struct SymmetrizedRotation {
  Word word;
  RotationRef ref;
  // Rotations of the same relator and orientation whose offsets agree modulo
  // the primitive period share this index.
  std::size_t appearance = 0;
};

std::vector<SymmetrizedRotation> symmetrize(const Presentation& p, const PieceOptions& options = {});

struct Piece {
  Word word;
  std::size_t offset = 0;  // start inside the (uninverted) relator
  std::vector<RotationRef> occurrences;
};

struct RelatorPieces {
  std::size_t max_piece = 0;
  // Fewest pieces concatenating to some rotation of the relator; nullopt when
  // no rotation is a concatenation of pieces.
  std::optional<std::size_t> min_decomposition;
  std::vector<Piece> pieces;  // maximal pieces, by offset
  // longest piece starting at each offset of the relator
  std::vector<std::size_t> longest_from;
};

struct PieceReport {
  bool symmetrized = true;
  std::vector<RelatorPieces> relators;
};

PieceReport compute_pieces(const Presentation& p, const PieceOptions& options = {});

// Greedy longest-piece-first cover of the relator read from `start`; returns
// the piece lengths, or nullopt if some position starts no piece.
std::optional<std::vector<std::size_t>> greedy_decomposition(const RelatorPieces& pieces,
                                                             std::size_t relator_length, std::size_t start);

struct CpWitness {
  std::size_t relator = 0;
  std::size_t start = 0;
  std::vector<Word> decomposition;
};

struct CpResult {
  bool verdict = true;
  std::vector<CpWitness> witnesses;
};

// C(p): no relator is a concatenation of fewer than p pieces.
CpResult check_Cp(const Presentation& p, std::size_t pbound, const PieceOptions& options = {});
CpResult check_Cp(const Presentation& p, const PieceReport& report, std::size_t pbound);

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // Exact comparison by cross multiplication.
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
  bool operator==(const Ratio&) const = default;
  Ratio reduced() const;
};

struct CprimeWorst {
  std::size_t relator = 0;
  Word piece;
  Ratio ratio{0, 1};
};

struct CprimeResult {
  bool verdict = true;
  std::optional<CprimeWorst> worst;  // absent when there are no relators
};

// C'(num/den): every piece u of every relator r has |u| * den < num * |r|.
CprimeResult check_Cprime(const Presentation& p, std::uint64_t num, std::uint64_t den,
                          const PieceOptions& options = {});
CprimeResult check_Cprime(const Presentation& p, const PieceReport& report, std::uint64_t num,
                          std::uint64_t den);

bool is_proper_power(const Word& w);

}  // namespace hnnembed
