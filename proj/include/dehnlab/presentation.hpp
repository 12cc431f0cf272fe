#ifndef DEHNLAB_PRESENTATION_HPP_
#define DEHNLAB_PRESENTATION_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dehnlab/word.hpp"

namespace dehnlab {

// A finite symmetrized presentation <X | R*>. Relators are stored closed
// under inversion and cyclic permutation, each cyclically reduced, sorted
// and deduplicated, so completion and the elementary-identity set read
// straight off the struct. Immutable after construction.
struct Presentation {
  int num_generators = 0;
  std::string alphabet;           // generator names, size == num_generators
  std::vector<Word> relators;     // the symmetrized set R*
  std::vector<Word> identities;   // I = {x x^-1, x^-1 x : x in X} union R*
  std::int64_t relator_length_sum = 0;  // L(R*) = sum of |r| over R*

  std::size_t max_relator_length() const;
};

// The minimal symmetrized set containing the cyclic reductions of the
// inputs: every relator is cyclically reduced first, then closed under
// inversion and rotation. Relators that cyclically reduce to the empty
// word are skipped. Output sorted by word_less, duplicates removed;
// idempotent.
std::vector<Word> symmetrize(const std::vector<Word>& relators);

// One representative per symmetrization orbit: the word_less-least rotation
// of min(w, w^-1). Used for deduplication and for the serialized form.
Word orbit_representative(const Word& w);

// Builds a presentation from raw relators. Relators using generators
// outside [0, num_generators) are rejected with the offending index in the
// message; relators that cyclically reduce to the empty word are dropped
// with a warning on stderr. Alphabet defaults to a, b, c, ...
Presentation build_presentation(int num_generators,
                                const std::vector<Word>& raw_relators,
                                std::string alphabet = "");

// --- Text format -----------------------------------------------------------
//
// One directive per line; '#' starts a comment; blank lines ignored.
//
//   gens a b        generator letters (lowercase, distinct)
//   rel abAB        one relator per line, "1" denotes the empty word
//   sub ab          optional subgroup generator (one per line)
//   priv aa         optional private relator (PKC keys)
//   w0 a / w1 b     optional PKC key words
//
// serialize(parse(text)) is a canonical fixed point: relators come out as
// sorted orbit representatives, so a second parse/serialize round trip
// reproduces the bytes exactly.

struct PresentationFile {
  Presentation presentation;
  std::vector<Word> subgroup_generators;
  std::vector<Word> private_relators;
  std::optional<Word> w0;
  std::optional<Word> w1;
};

PresentationFile parse_presentation(std::istream& in);
PresentationFile parse_presentation_text(const std::string& text);
PresentationFile load_presentation_file(const std::string& path);
std::string serialize_presentation(const PresentationFile& file);

}  // namespace dehnlab

#endif  // DEHNLAB_PRESENTATION_HPP_
