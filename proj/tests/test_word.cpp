#include <doctest.h>

#include "dehnlab/rng.hpp"
#include "dehnlab/word.hpp"
#include "oracles.hpp"

using namespace dehnlab;
using namespace dehnlab::testing;

TEST_CASE("free reduction examples") {
  CHECK(reduce(Word::parse("aA")) == Word());
  CHECK(reduce(Word::parse("abBA")) == Word());
  CHECK(reduce(Word::parse("abBc")) == Word::parse("ac"));
  CHECK(reduce(Word()) == Word());
}

TEST_CASE("cyclic reduction examples") {
  CHECK(cyclically_reduce(Word::parse("Aba")) == Word::parse("b"));
  CHECK(cyclically_reduce(Word::parse("ab")) == Word::parse("ab"));
  // Derived by iterating the strip-first/last oracle until stable.
  CHECK(brute_cyclic_reduce(Word::parse("BabAb")) == Word::parse("b"));
  CHECK(cyclically_reduce(Word::parse("BabAb")) == Word::parse("b"));
}

TEST_CASE("inversion examples") {
  CHECK(invert(Word::parse("ab")) == Word::parse("BA"));
  CHECK(invert(Word()) == Word());
  CHECK(invert(invert(Word::parse("aBa"))) == Word::parse("aBa"));
}

TEST_CASE("letter involution") {
  for (int g = 0; g < 26; ++g) {
    for (int s : {-1, 1}) {
      Letter l(g, s);
      CHECK(l.inverse().inverse() == l);
      CHECK(l.inverse().generator() == g);
      CHECK(l.inverse().sign() == -s);
    }
  }
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"1", "a", "abBA", "zZ", "aBcD"}) {
    Word w = Word::parse(text);
    CHECK(w.str() == text);
  }
  CHECK(Word::parse("1").empty());
  CHECK_THROWS(Word::parse("a b"));
  CHECK_THROWS(Word::parse("x", "ab"));
  // Alphabet-relative parsing maps by declaration order.
  Word w = Word::parse("xY", "xy");
  CHECK(w[0].generator() == 0);
  CHECK(w[1].generator() == 1);
  CHECK(w[1].sign() == -1);
  CHECK(w.str("xy") == "xY");
}

TEST_CASE("reduction properties on random words") {
  Rng rng(12345);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word_up_to(3, 30, rng);
    Word r = reduce(w);
    CHECK(r == brute_reduce(w));
    CHECK(reduce(r) == r);
    CHECK(r.size() <= w.size());
    CHECK(reduce(w * invert(w)) == Word());
    CHECK(exponent_vector(r, 3) == exponent_vector(w, 3));

    Word c = cyclically_reduce(w);
    CHECK(c == brute_cyclic_reduce(w));
    if (!c.empty()) {
      CHECK(c[0] != c[c.size() - 1].inverse());
    }

    auto ev = exponent_vector(invert(w), 3);
    auto orig = exponent_vector(w, 3);
    for (std::size_t g = 0; g < 3; ++g) {
      CHECK(ev[g] == -orig[g]);
    }
  }
}

TEST_CASE("word order is total and length-first") {
  CHECK(word_less(Word::parse("a"), Word::parse("aa")));
  CHECK(word_less(Word::parse("a"), Word::parse("A")));
  CHECK(word_less(Word::parse("A"), Word::parse("b")));
  CHECK(!word_less(Word::parse("ab"), Word::parse("ab")));
}

TEST_CASE("rotation") {
  CHECK(rotate(Word::parse("abc"), 1) == Word::parse("bca"));
  CHECK(rotate(Word::parse("abc"), 3) == Word::parse("abc"));
  CHECK(rotate(Word(), 2) == Word());
}
