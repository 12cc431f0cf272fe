#ifndef DEHNLAB_WORD_HPP_
#define DEHNLAB_WORD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dehnlab {

// A letter of the symmetric alphabet X^±. Generator g (0-based) with sign s
// is stored as the nonzero code s * (g + 1), so inversion is negation.
class Letter {
 public:
  Letter(int generator_index, int sign)
      : code_(static_cast<std::int8_t>(sign < 0 ? -(generator_index + 1)
                                                : generator_index + 1)) {}

  static Letter from_code(std::int8_t code) { return Letter(code); }

  int generator() const { return (code_ < 0 ? -code_ : code_) - 1; }
  int sign() const { return code_ < 0 ? -1 : 1; }
  std::int8_t code() const { return code_; }
  Letter inverse() const { return Letter(static_cast<std::int8_t>(-code_)); }

  friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }

 private:
  explicit Letter(std::int8_t code) : code_(code) {}
  std::int8_t code_;
};

// A word over X^±: a finite sequence of letters, possibly unreduced.
// The empty word is the identity. Value type, immutable in spirit: all
// operations on words are free functions returning fresh words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::int8_t> codes) : codes_(std::move(codes)) {}

  // ASCII surface syntax: 'a'..'z' are generators 0..25, 'A'..'Z' their
  // inverses, "1" (alone) and "" both denote the empty word. The alphabet
  // string gives the generator names in declaration order; parsing rejects
  // characters outside it.
  static Word parse(std::string_view text,
                    std::string_view alphabet = kFullAlphabet);
  std::string str(std::string_view alphabet = kFullAlphabet) const;

  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Letter operator[](std::size_t i) const {
    return Letter::from_code(codes_[i]);
  }
  const std::vector<std::int8_t>& codes() const { return codes_; }

  // Concatenation in the free monoid (no cancellation).
  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word& a, const Word& b) {
    return a.codes_ == b.codes_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  static constexpr std::string_view kFullAlphabet = "abcdefghijklmnopqrstuvwxyz";

 private:
  std::vector<std::int8_t> codes_;
};

// Free reduction: delete adjacent mutually-inverse pairs until none remain.
Word reduce(const Word& w);

// Free reduction followed by stripping mutually-inverse first/last letters.
// The result is conjugate to w in F(X).
Word cyclically_reduce(const Word& w);

// The inverse word: reversed sequence of letter inverses.
Word invert(const Word& w);

// Cyclic rotation by k: w[k..] ++ w[..k].
Word rotate(const Word& w, std::size_t k);

// Total order used for canonical forms: by length, then by letter rank
// (a < A < b < B < ...).
bool word_less(const Word& a, const Word& b);

// Exponent sums per generator (the abelianization image).
std::vector<std::int64_t> exponent_vector(const Word& w, int num_generators);

}  // namespace dehnlab

#endif  // DEHNLAB_WORD_HPP_
