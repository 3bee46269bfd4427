#pragma once

// Text syntax for words and presentation files.
//
// Words are whitespace-separated generator names. A trailing ' inverts the
// preceding atom; ( ... ) groups; ^k (k >= 1) repeats an atom literally and
// ^x conjugates it as x u x'. Nothing is reduced on parse.
//
//   ( a b c )^8        abcabc... (24 letters)
//   a^t                t a t'
//
// Presentation files are line oriented, with # comments:
//
//   gens: a b c t
//   hnn: t; ascending: a b; free: c
//   rel a: a^t = ( a b c )^8
//   rel: b c a b c b c
//   sub: a b a'
//
// "lhs = rhs" denotes the relator lhs rhs'. Relators must be nonempty and
// cyclically reduced; `sub` lines (subgroup generators) are free-form.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnnembed/words.hpp"

namespace hnnembed {

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

struct HnnHeader {
  std::string stable;
  std::vector<std::string> ascending;
  std::vector<std::string> free;
};

struct PresentationFile {
  Alphabet alphabet;
  std::vector<Word> relators;
  std::vector<std::string> labels;
  std::vector<Word> subgroup;
  std::vector<std::string> subgroup_labels;
  std::optional<HnnHeader> hnn;
};

// Throws ParseError carrying line and column.
PresentationFile parse_presentation_file(std::string_view text);
PresentationFile read_presentation_file(const std::string& path);

std::string write_presentation_file(const PresentationFile& file);

}  // namespace hnnembed
