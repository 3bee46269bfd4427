#pragma once

// Evidence that an embedding H -> G satisfies the injectivity hypotheses:
// the quotient X/Y is C(7) (checked through the stronger C'(1/7)), its words
// are not proper powers and are pairwise distinct, and X has no extra powers
// and no duplicates relative to Y. The irreducible construction adds digram
// coverage and the wedge structure of the image subgroup's core.
//
// Every field is recomputed from (H, G) by certify_embedding; only the
// irreducible construction's bookkeeping (the chosen basepoint labels and the
// digram words) is taken as input, and that input is itself checked against G.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hnnembed/presentation.hpp"
#include "hnnembed/subquotient.hpp"
#include "hnnembed/words.hpp"

namespace hnnembed {

struct PartialAscHNN;

enum class Construction { ascending, irreducible };

struct WordPower {
  std::size_t exponent = 1;
  bool proper_power = false;
};

struct IrreducibleInputs {
  std::vector<Letter> chosen_labels;  // x_1 .. x_{2|J|}, in G's alphabet
  std::vector<Word> u_words;          // one per free generator
  std::vector<Word> v_words;          // one per new generator
};

struct IrreducibleEvidence {
  IrreducibleInputs inputs;
  std::size_t basepoint_degree = 0;
  std::size_t degree_bound = 0;  // 2|I|
  bool labels_fresh = false;     // distinct, non-stable, unused at the core's basepoint
  bool shape = false;            // B_j = x_{j+|J|} U_j . x_j', C_k = c_k V_k . c_k
  std::vector<DigramCoverage> coverage;  // u_words then v_words
  bool wedge_check = false;
  bool core_is_wedge = false;
};

struct EmbeddingCertificate {
  Construction construction = Construction::ascending;
  std::vector<std::uint32_t> new_generators;  // G generators not in H
  std::vector<std::size_t> w_sources;         // G relator behind each W word
  Presentation quotient_presentation;         // <new generators | W>
  PieceReport pieces;
  CpResult c7;
  CprimeResult cprime17;
  std::vector<WordPower> powers;
  bool no_proper_powers = false;
  bool distinct = false;
  NoExtraPowersResult no_extra_powers;
  NoDuplicatesResult no_duplicates;
  bool liftable = false;  // two-cell search finds no unliftable cancellable pair
  bool monomorphism = false;
  std::size_t image_rank = 0;
  bool quotient_matches_w = false;
  bool h_relators_preserved = false;
  std::optional<IrreducibleEvidence> irreducible;

  // Names of the verdicts that are false; empty iff the certificate holds.
  std::vector<std::string> failures() const;
  bool all_true() const { return failures().empty(); }
};

// Throws Error when G does not extend H (missing generators, changed images).
EmbeddingCertificate certify_embedding(const PartialAscHNN& h, const PartialAscHNN& g, Construction construction,
                                       const std::optional<IrreducibleInputs>& irreducible = std::nullopt);

}  // namespace hnnembed
