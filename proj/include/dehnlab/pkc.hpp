#ifndef DEHNLAB_PKC_HPP_
#define DEHNLAB_PKC_HPP_

#include <cstdint>
#include <vector>

#include "dehnlab/presentation.hpp"
#include "dehnlab/rng.hpp"
#include "dehnlab/solvers.hpp"
#include "dehnlab/word.hpp"

namespace dehnlab {

// A Wagner-Magyarik style key: the public data is the platform presentation
// G = <X|R> plus the two plaintext words; the private data is the extra
// relator set S cutting down to the quotient G' = <X | R u S> where the two
// words stay distinct.
struct KeyPair {
  Presentation group;                  // public platform G
  Word w0, w1;                         // public plaintext words
  std::vector<Word> private_relators;  // S (symmetrized)
  Presentation quotient;               // G' (derived, private side)
};

// Validates w0 != w1 in the quotient through the abelianized model (the only
// decidable model bundled here; exact whenever G' is abelian, as in the demo
// key). Throws if S is empty or the inequality cannot be certified.
KeyPair make_keypair(const Presentation& group, std::vector<Word> extra_relators,
                     Word w0, Word w1);

// G = <a,b | abAB> (free abelian of rank 2), S = {aa, bb} so G' is the
// Klein four-group, w0 = a, w1 = b. Both sides admit exact oracles.
KeyPair demo_keypair();

// Key file round trip through the presentation text format (rel/priv/w0/w1).
KeyPair keypair_from_file(const PresentationFile& file);
PresentationFile keypair_to_file(const KeyPair& key);

enum class PkcBit : int { zero = 0, one = 1, undecided = 2 };

// Encoding: n random I-transformations applied to w_bit over the public
// presentation.
Word encrypt(const KeyPair& key, int bit, std::int64_t n, Rng& rng);

// Decoding solves the word choice problem over the private quotient.
PkcBit decrypt(const KeyPair& key, const Word& ciphertext, int step_budget);

// The generic attack: the same choice procedure over the public
// presentation alone.
PkcBit attack(const Presentation& group, const Word& w0, const Word& w1,
              const Word& ciphertext, int step_budget);
PkcBit attack(const KeyPair& key, const Word& ciphertext, int step_budget);

// Conjugacy variant: encodes with a random conjugate, decodes/attacks with
// lockstep conjugacy runs.
Word encrypt_conj(const KeyPair& key, int bit, std::int64_t n, Rng& rng);
PkcBit decrypt_conj(const KeyPair& key, const Word& ciphertext,
                    int step_budget);
PkcBit attack_conj(const Presentation& group, const Word& w0, const Word& w1,
                   const Word& ciphertext, int step_budget);

}  // namespace dehnlab

#endif  // DEHNLAB_PKC_HPP_
