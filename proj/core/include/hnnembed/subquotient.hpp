#pragma once

// Subcomplexes Y of a presentation complex X, the quotient X/Y, and the
// relative conditions (no extra powers, no duplicates) that make cancellable
// pairs of X/Y lift to X.
//
// Projection deletes every letter whose generator lies in Y. The projected
// boundary words are kept verbatim: a projection may contain backtracks even
// when the original relator is cyclically reduced, and exponents are read
// from the literal letter sequence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hnnembed/presentation.hpp"
#include "hnnembed/words.hpp"

namespace hnnembed {

class SubcomplexSpec {
 public:
  // Throws Error if a sub-relator uses a generator outside sub_generators.
  SubcomplexSpec(Presentation parent, std::vector<std::uint32_t> sub_generators,
                 std::vector<std::size_t> sub_relators);

  // Y spanned by `generators` and every relator supported on them.
  static SubcomplexSpec killing(Presentation parent, std::vector<std::uint32_t> generators);

  const Presentation& parent() const noexcept { return parent_; }
  const std::vector<std::uint32_t>& sub_generators() const noexcept { return sub_generators_; }
  const std::vector<std::size_t>& sub_relators() const noexcept { return sub_relators_; }
  bool has_generator(std::uint32_t g) const { return generator_in_y_.at(g); }
  bool has_relator(std::size_t r) const { return relator_in_y_.at(r); }

 private:
  Presentation parent_;
  std::vector<std::uint32_t> sub_generators_;
  std::vector<std::size_t> sub_relators_;
  std::vector<bool> generator_in_y_;
  std::vector<bool> relator_in_y_;
};

struct ProjectedRelator {
  std::size_t source = 0;  // relator index in the parent
  Word word;               // over the quotient alphabet; may be empty
};

struct QuotientPresentation {
  Alphabet alphabet;                        // parent generators outside Y, parent order
  std::vector<std::uint32_t> generator_of;  // quotient generator -> parent generator
  std::vector<ProjectedRelator> relators;   // every relator outside Y, parent order
  std::vector<std::size_t> dropped;         // relators inside Y

  // Nonempty projections as a literal presentation, labelled by source.
  Presentation presentation(const Presentation& parent) const;
};

QuotientPresentation quotient(const SubcomplexSpec& spec);

// Deletes Y letters and renumbers the rest into the quotient alphabet.
Word project(const SubcomplexSpec& spec, const QuotientPresentation& q, const Word& w);

struct ExtraPowerViolation {
  std::size_t relator = 0;
  std::size_t exponent_before = 0;
  std::size_t exponent_after = 0;  // 0 when the relator projects to a point
  bool projects_to_point = false;
};

struct NoExtraPowersResult {
  bool verdict = true;
  std::vector<ExtraPowerViolation> violations;
};

NoExtraPowersResult check_no_extra_powers(const SubcomplexSpec& spec);

struct NoDuplicatesResult {
  bool verdict = true;
  // (R1, R2) with equal projections up to rotation but distinct boundaries.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  // Same test with one projection inverted; reported, never fails the verdict.
  std::vector<std::pair<std::size_t, std::size_t>> inverse_collisions;
};

NoDuplicatesResult check_no_duplicates(const SubcomplexSpec& spec);

// Two 2-cells glued along an edge labelled shared_edge. rot1/rot2 rotate each
// boundary so that it starts with that edge.
struct TwoCellDiagram {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  Letter shared_edge{};
  std::size_t rot1 = 0;
  std::size_t rot2 = 0;

  bool operator==(const TwoCellDiagram&) const = default;
};

// Throws Error when a rotation is out of range or does not start with the
// shared edge.
bool cancellable_alignment(const Presentation& p, const TwoCellDiagram& d);

struct LiftCounterexample {
  // Indices are parent relators; the letter and rotations are in quotient
  // coordinates.
  TwoCellDiagram quotient_cells;
  // The unique lift sharing the preimage edge (parent coordinates).
  TwoCellDiagram lifted;
};

// Exhaustive two-cell search for a cancellable quotient pair whose lift is
// not cancellable.
std::optional<LiftCounterexample> liftability_counterexample_search(const SubcomplexSpec& spec);

}  // namespace hnnembed
