#include <doctest.h>

#include <algorithm>

#include "dehnlab/presentation.hpp"
#include "dehnlab/rng.hpp"
#include "oracles.hpp"

using namespace dehnlab;
using namespace dehnlab::testing;

TEST_CASE("symmetrize examples") {
  CHECK(symmetrize({}).empty());

  auto cube = symmetrize({Word::parse("aaa")});
  CHECK(cube == std::vector<Word>{Word::parse("aaa"), Word::parse("AAA")});

  auto comm = symmetrize({Word::parse("abAB")});
  CHECK(comm.size() == 8);
  CHECK(comm == enumerate_symmetrization({Word::parse("abAB")}));
}

TEST_CASE("symmetrize is idempotent and closed") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    std::vector<Word> rel{random_word_up_to(2, 6, rng),
                          random_word_up_to(2, 5, rng)};
    auto sym = symmetrize(rel);
    CHECK(sym == symmetrize(sym));
    CHECK(sym == enumerate_symmetrization(rel));
    for (const auto& r : sym) {
      CHECK(std::binary_search(sym.begin(), sym.end(), invert(r), word_less));
      if (!r.empty()) {
        CHECK(std::binary_search(sym.begin(), sym.end(), rotate(r, 1),
                                 word_less));
      }
      CHECK(cyclically_reduce(r) == r);
    }
  }
}

TEST_CASE("build_presentation computes identities and L") {
  auto p = build_presentation(1, {Word::parse("aaa")});
  CHECK(p.relator_length_sum == 6);
  CHECK(p.identities == std::vector<Word>{Word::parse("aA"), Word::parse("Aa"),
                                          Word::parse("aaa"),
                                          Word::parse("AAA")});

  auto free2 = build_presentation(2, {});
  CHECK(free2.relator_length_sum == 0);
  CHECK(free2.identities ==
        std::vector<Word>{Word::parse("aA"), Word::parse("Aa"),
                          Word::parse("bB"), Word::parse("Bb")});

  auto z2 = build_presentation(2, {Word::parse("abAB")});
  CHECK(z2.relator_length_sum == 32);  // 8 words of length 4
  CHECK(z2.relators.size() == 8);
  CHECK(z2.identities.size() == 12);
}

TEST_CASE("build_presentation rejects letters outside the alphabet") {
  CHECK_THROWS_WITH_AS(
      build_presentation(1, {Word::parse("aaa"), Word::parse("ab")}),
      doctest::Contains("relator 1"), std::invalid_argument);
  CHECK_THROWS(build_presentation(27, {}));
}

TEST_CASE("duplicate and trivial relators collapse") {
  auto p = build_presentation(1, {Word::parse("aaa"), Word::parse("AAA"),
                                  Word::parse("aA")});
  CHECK(p.relators == std::vector<Word>{Word::parse("aaa"), Word::parse("AAA")});
}

TEST_CASE("orbit representative is the least form") {
  CHECK(orbit_representative(Word::parse("BabA")) == Word::parse("abAB"));
  CHECK(orbit_representative(Word::parse("AAA")) == Word::parse("aaa"));
}

TEST_CASE("presentation file round trip is canonical") {
  std::string text =
      "# platform group\n"
      "gens a b\n"
      "rel BabA\n"
      "sub ab\n"
      "sub ba\n";
  auto file = parse_presentation_text(text);
  CHECK(file.presentation.num_generators == 2);
  CHECK(file.subgroup_generators.size() == 2);
  std::string canon = serialize_presentation(file);
  CHECK(canon == serialize_presentation(parse_presentation_text(canon)));
  CHECK(canon.find("rel abAB") != std::string::npos);
}

TEST_CASE("presentation file with key words") {
  std::string text =
      "gens a b\nrel abAB\npriv aa\npriv bb\nw0 a\nw1 b\n";
  auto file = parse_presentation_text(text);
  REQUIRE(file.w0.has_value());
  REQUIRE(file.w1.has_value());
  CHECK(file.private_relators.size() == 4);  // {aa, AA, bb, BB}
  std::string canon = serialize_presentation(file);
  CHECK(canon == serialize_presentation(parse_presentation_text(canon)));
}

TEST_CASE("presentation file errors") {
  CHECK_THROWS(parse_presentation_text("rel aa\n"));        // before gens
  CHECK_THROWS(parse_presentation_text("gens a a\n"));      // duplicate
  CHECK_THROWS(parse_presentation_text("gens a\nrel ab\n"));  // bad letter
  CHECK_THROWS(parse_presentation_text("gens a\nfoo a\n"));   // directive
  CHECK_THROWS(parse_presentation_text(""));
}

TEST_CASE("non-default alphabet survives the round trip") {
  auto file = parse_presentation_text("gens x z\nrel xzXZ\n");
  CHECK(file.presentation.alphabet == "xz");
  std::string canon = serialize_presentation(file);
  CHECK(canon.find("gens x z") != std::string::npos);
  CHECK(canon == serialize_presentation(parse_presentation_text(canon)));
}
