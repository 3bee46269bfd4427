#pragma once

// Dehn's algorithm for C'(1/6) presentations and a step-count area proxy.
//
// The working word is kept freely and cyclically reduced. Each step finds a
// subword u of the cyclic word that is a prefix of a symmetrized relator
// s = u v with 2|u| > |s| and replaces it by v'. The number of steps bounds
// the area of a minimal van Kampen diagram from above; it is what "area"
// means everywhere in this module.

#include <cstddef>
#include <optional>
#include <vector>

#include "hnnembed/presentation.hpp"
#include "hnnembed/w_family.hpp"
#include "hnnembed/words.hpp"

namespace hnnembed {

struct DehnStep {
  Word conjugator;        // the step multiplies by conjugator * s * conjugator'
  RotationRef relator;    // s = relator (inverted if asked), rotated by offset
  std::size_t position = 0;  // start of the match in the rotated cyclic word
  std::size_t length = 0;    // |u|
  std::size_t word_length_before = 0;
  std::size_t word_length_after = 0;
};

struct DehnResult {
  bool trivial = false;
  Word residue;  // the cyclically reduced word left when no step applies
  std::vector<DehnStep> steps;
};

class DehnSolver {
 public:
  // Throws Error("presentation not metric small cancellation") unless p is C'(1/6).
  explicit DehnSolver(Presentation p);

  const Presentation& presentation() const noexcept { return p_; }
  DehnResult solve(const Word& w) const;

  // Fewest factors of free_reduce(w), each a subword of some symmetrized
  // relator of length at most that relator's length. A letter occurring in
  // no relator is a factor on its own.
  std::size_t piece_count(const Word& w) const;

 private:
  struct Source {
    Word word;
    std::size_t relator;
    bool inverted;
  };
  struct Match {
    std::size_t source = 0;
    std::size_t offset = 0;
    std::size_t position = 0;
    std::size_t length = 0;
  };

  std::optional<Match> best_match(const Word& cyclic) const;
  std::size_t longest_factor(const Word& w, std::size_t i) const;

  Presentation p_;
  std::vector<Source> sources_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_first_letter_;
};

DehnResult dehn_solve(const Presentation& p, const Word& w);

// Multiplies out the recorded conjugated relators and checks that their
// product equals w in the free group.
bool replay_dehn_steps(const Presentation& p, const Word& w, const std::vector<DehnStep>& steps);

struct AreaSample {
  Word word;
  std::size_t length = 0;  // |free_reduce(word)|
  std::size_t area = 0;    // Dehn steps
  Ratio ratio{0, 1};       // area / length, reduced; 0/1 when length is 0
  std::size_t pieces = 0;  // piece_count(word)
};

struct AreaReport {
  Ratio max_k{0, 1};
  bool within_piece_bound = true;  // area <= pieces on every sample
  std::vector<AreaSample> table;
};

// Throws Error if some sample does not reduce to the empty word.
AreaReport area_bound_check(const Presentation& p, const std::vector<Word>& samples);

// A product of 1..max_conjugates conjugated relators (or inverses), with
// conjugators of length at most max_conjugator_length, freely reduced.
// Redrawn while the product is empty.
Word random_trivial_word(Rng& rng, const Presentation& p, std::size_t max_conjugates,
                         std::size_t max_conjugator_length = 8);

}  // namespace hnnembed
