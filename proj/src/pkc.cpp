#include "dehnlab/pkc.hpp"

#include <stdexcept>

#include "dehnlab/challengers.hpp"
#include "dehnlab/lattice.hpp"

namespace dehnlab {

namespace {

PkcBit to_bit(WordChoice c) {
  switch (c) {
    case WordChoice::zero:
      return PkcBit::zero;
    case WordChoice::one:
      return PkcBit::one;
    default:
      return PkcBit::undecided;
  }
}

}  // namespace

KeyPair make_keypair(const Presentation& group,
                     std::vector<Word> extra_relators, Word w0, Word w1) {
  if (extra_relators.empty()) {
    throw std::invalid_argument("private relator set must be non-empty");
  }
  std::vector<Word> all = group.relators;
  std::vector<Word> priv = symmetrize(extra_relators);
  all.insert(all.end(), priv.begin(), priv.end());
  Presentation quotient =
      build_presentation(group.num_generators, all, group.alphabet);

  // Certify w0 != w1 in the quotient through its abelianization.
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : quotient.relators) {
    rows.push_back(exponent_vector(r, quotient.num_generators));
  }
  IntegerLattice lattice(std::move(rows),
                         static_cast<std::size_t>(quotient.num_generators));
  std::vector<std::int64_t> diff =
      exponent_vector(reduce(w0 * invert(w1)), quotient.num_generators);
  if (lattice.contains(diff)) {
    throw std::invalid_argument(
        "cannot certify w0 != w1 in the quotient (abelianized model)");
  }

  KeyPair key;
  key.group = group;
  key.w0 = std::move(w0);
  key.w1 = std::move(w1);
  key.private_relators = std::move(priv);
  key.quotient = std::move(quotient);
  return key;
}

KeyPair demo_keypair() {
  Presentation group = build_presentation(2, {Word::parse("abAB")});
  return make_keypair(group, {Word::parse("aa"), Word::parse("bb")},
                      Word::parse("a"), Word::parse("b"));
}

KeyPair keypair_from_file(const PresentationFile& file) {
  if (!file.w0 || !file.w1) {
    throw std::invalid_argument("key file must carry w0 and w1 lines");
  }
  return make_keypair(file.presentation, file.private_relators, *file.w0,
                      *file.w1);
}

PresentationFile keypair_to_file(const KeyPair& key) {
  PresentationFile f;
  f.presentation = key.group;
  f.private_relators = key.private_relators;
  f.w0 = key.w0;
  f.w1 = key.w1;
  return f;
}

Word encrypt(const KeyPair& key, int bit, std::int64_t n, Rng& rng) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("bit must be 0 or 1");
  }
  InsertionDistribution d = identity_distribution(key.group);
  return random_equal_word(key.group, bit == 0 ? key.w0 : key.w1, n, d, rng)
      .word;
}

PkcBit decrypt(const KeyPair& key, const Word& ciphertext, int step_budget) {
  return to_bit(
      word_choice_attack(key.quotient, key.w0, key.w1, ciphertext, step_budget));
}

PkcBit attack(const Presentation& group, const Word& w0, const Word& w1,
              const Word& ciphertext, int step_budget) {
  return to_bit(word_choice_attack(group, w0, w1, ciphertext, step_budget));
}

PkcBit attack(const KeyPair& key, const Word& ciphertext, int step_budget) {
  return attack(key.group, key.w0, key.w1, ciphertext, step_budget);
}

Word encrypt_conj(const KeyPair& key, int bit, std::int64_t n, Rng& rng) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("bit must be 0 or 1");
  }
  InsertionDistribution d = identity_distribution(key.group);
  return random_conjugate(key.group, bit == 0 ? key.w0 : key.w1, n, d, rng)
      .word;
}

PkcBit decrypt_conj(const KeyPair& key, const Word& ciphertext,
                    int step_budget) {
  return to_bit(
      conjugacy_choice(key.quotient, key.w0, key.w1, ciphertext, step_budget));
}

PkcBit attack_conj(const Presentation& group, const Word& w0, const Word& w1,
                   const Word& ciphertext, int step_budget) {
  return to_bit(conjugacy_choice(group, w0, w1, ciphertext, step_budget));
}

}  // namespace dehnlab
