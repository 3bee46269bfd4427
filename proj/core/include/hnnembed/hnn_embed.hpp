#pragma once

// Partial ascending HNN extensions of free groups and their embeddings into
// ascending ones.
//
//   H = < a_i, b_j, t | t a_i t' = A_i >
//   G = < a_i, b_j, c1, c2, t | t a_i t' = A_i, t b_j t' = B_j, t c_k t' = C_k >
//
// H's presentation complex is a subcomplex Y of G's complex X, and X/Y is
// the presentation complex of <c1, c2 | W>. The constructions choose B_j and
// C_k so that W is C'(1/7), free of proper powers and of duplicates, which
// makes pi_1 Y -> pi_1 X injective.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hnnembed/certificate.hpp"
#include "hnnembed/presentation.hpp"
#include "hnnembed/subquotient.hpp"
#include "hnnembed/syntax.hpp"
#include "hnnembed/words.hpp"

namespace hnnembed {

struct PartialAscHNN {
  Alphabet alphabet;  // every generator, stable letter included
  std::uint32_t stable = 0;
  std::vector<std::uint32_t> ascending;
  std::vector<std::uint32_t> free;
  std::vector<Word> images;  // images[i] is the image of ascending[i]

  // The image of generator g, which must be ascending.
  const Word& image_of(std::uint32_t g) const;
};

// Empty iff h is well formed; otherwise one line per problem.
std::vector<std::string> validate(const PartialAscHNN& h);

// Reads a file with an `hnn:` header. Every relator must read t g t' X with
// g ascending and X free of t; the image of g is X'.
PartialAscHNN hnn_from_file(const PresentationFile& file);
// `rel g: g^t = A` lines, one per ascending generator.
std::string write_hnn_file(const PartialAscHNN& h);

// One relator t g t' A' per ascending generator, in `ascending` order,
// labelled by the generator name.
Presentation hnn_presentation(const PartialAscHNN& h);

// X = complex of g_ext, Y = generators of h plus the relators of h's
// ascending generators. g_ext must contain h's generators by name.
SubcomplexSpec build_X_and_Y(const PartialAscHNN& h, const PartialAscHNN& g_ext);

struct ConstructionOptions {
  std::uint64_t seed = 0;
  std::size_t initial_length = 64;
  std::size_t max_escalations = 16;
};

struct AscHNNResult {
  PartialAscHNN group;                         // G, ascending on every non-stable generator
  std::vector<std::uint32_t> new_generators;   // c1, c2 in G's alphabet
  EmbeddingCertificate certificate;
  std::size_t escalations = 0;
};

// Adds c1, c2 and long W words. Throws Error if h is invalid or the
// certificate has a false verdict.
AscHNNResult construct_embedding(const PartialAscHNN& h, const ConstructionOptions& options = {});

// Variant whose B_j, C_k also carry every reduced digram, so that G is fully
// irreducible whenever H is. Needs at least one free generator.
AscHNNResult construct_irreducible_embedding(const PartialAscHNN& h, const ConstructionOptions& options = {});

}  // namespace hnnembed
