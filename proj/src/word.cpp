#include "dehnlab/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehnlab {

Word Word::parse(std::string_view text, std::string_view alphabet) {
  if (text == "1") {
    return Word();
  }
  std::vector<std::int8_t> codes;
  codes.reserve(text.size());
  for (char c : text) {
    bool upper = (c >= 'A' && c <= 'Z');
    char base = upper ? static_cast<char>(c - 'A' + 'a') : c;
    auto pos = alphabet.find(base);
    if (pos == std::string_view::npos) {
      throw std::invalid_argument(std::string("unknown letter '") + c +
                                  "' in word \"" + std::string(text) + "\"");
    }
    std::int8_t code = static_cast<std::int8_t>(pos + 1);
    codes.push_back(upper ? static_cast<std::int8_t>(-code) : code);
  }
  return Word(std::move(codes));
}

std::string Word::str(std::string_view alphabet) const {
  if (codes_.empty()) {
    return "1";
  }
  std::string out;
  out.reserve(codes_.size());
  for (std::int8_t code : codes_) {
    int gen = (code < 0 ? -code : code) - 1;
    char c = alphabet.at(static_cast<std::size_t>(gen));
    out.push_back(code < 0 ? static_cast<char>(c - 'a' + 'A') : c);
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<std::int8_t> codes;
  codes.reserve(a.codes_.size() + b.codes_.size());
  codes.insert(codes.end(), a.codes_.begin(), a.codes_.end());
  codes.insert(codes.end(), b.codes_.begin(), b.codes_.end());
  return Word(std::move(codes));
}

Word reduce(const Word& w) {
  std::vector<std::int8_t> stack;
  stack.reserve(w.size());
  for (std::int8_t code : w.codes()) {
    if (!stack.empty() && stack.back() == -code) {
      stack.pop_back();
    } else {
      stack.push_back(code);
    }
  }
  return Word(std::move(stack));
}

Word cyclically_reduce(const Word& w) {
  Word r = reduce(w);
  const auto& c = r.codes();
  std::size_t lo = 0;
  std::size_t hi = c.size();
  while (hi - lo >= 2 && c[lo] == -c[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<std::int8_t>(c.begin() + static_cast<long>(lo),
                                       c.begin() + static_cast<long>(hi)));
}

Word invert(const Word& w) {
  std::vector<std::int8_t> codes(w.codes().rbegin(), w.codes().rend());
  for (auto& code : codes) {
    code = static_cast<std::int8_t>(-code);
  }
  return Word(std::move(codes));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) {
    return w;
  }
  k %= w.size();
  std::vector<std::int8_t> codes(w.codes());
  std::rotate(codes.begin(), codes.begin() + static_cast<long>(k),
              codes.end());
  return Word(std::move(codes));
}

namespace {
// Rank a < A < b < B < ... so canonical forms do not depend on ASCII quirks.
inline int letter_rank(std::int8_t code) {
  int gen = (code < 0 ? -code : code) - 1;
  return 2 * gen + (code < 0 ? 1 : 0);
}
}  // namespace

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a.codes()[i]);
    int rb = letter_rank(b.codes()[i]);
    if (ra != rb) {
      return ra < rb;
    }
  }
  return false;
}

std::vector<std::int64_t> exponent_vector(const Word& w, int num_generators) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(num_generators), 0);
  for (std::int8_t code : w.codes()) {
    int gen = (code < 0 ? -code : code) - 1;
    v.at(static_cast<std::size_t>(gen)) += (code < 0 ? -1 : 1);
  }
  return v;
}

}  // namespace dehnlab
