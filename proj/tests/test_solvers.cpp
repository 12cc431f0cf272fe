#include <doctest.h>

#include <set>

#include "dehnlab/digraph.hpp"
#include "dehnlab/solvers.hpp"
#include "oracles.hpp"

using namespace dehnlab;
using namespace dehnlab::testing;

namespace {

const Presentation& z2() {
  static Presentation p = build_presentation(2, {Word::parse("abAB")});
  return p;
}

const Presentation& z3() {
  static Presentation p = build_presentation(1, {Word::parse("aaa")});
  return p;
}

const Presentation& free2() {
  static Presentation p = build_presentation(2, {});
  return p;
}

void check_wsp_witness(const SolveOutcome& out, const Word& w) {
  REQUIRE(out.witness.has_value());
  auto end = trace(*out.witness, out.witness->base_out, w);
  REQUIRE(end.has_value());
  CHECK(*end == out.witness->base_out);
}

void check_csp_witness(const SolveOutcome& out, const Word& w2) {
  REQUIRE(out.witness.has_value());
  REQUIRE(out.witness_locus.has_value());
  auto [v, shift] = *out.witness_locus;
  Word loop = rotate(cyclically_reduce(w2), shift);
  auto end = trace(*out.witness, v, loop);
  REQUIRE(end.has_value());
  CHECK(*end == v);
}

}  // namespace

TEST_CASE("wsp examples") {
  auto one = solve_wsp(z3(), Word::parse("aaa"), 10);
  CHECK(one.accepted());
  CHECK(one.iterations == 1);
  check_wsp_witness(one, Word::parse("aaa"));

  auto zero = solve_wsp(z2(), Word(), 10);
  CHECK(zero.accepted());
  CHECK(zero.iterations == 0);

  auto no = solve_wsp(z2(), Word::parse("ab"), 5);
  CHECK(!no.accepted());
  CHECK(no.iterations == 5);
  CHECK(!AbelianModel(z2()).trivial(Word::parse("ab")));
}

TEST_CASE("wsp acceptance is monotone in the budget") {
  Word w = Word::parse("abaBAbAB");  // nested commutator-style identity in Z^2
  REQUIRE(AbelianModel(z2()).trivial(w));
  auto first = solve_wsp(z2(), w, 15);
  REQUIRE(first.accepted());
  for (int extra = 0; extra < 3; ++extra) {
    auto again = solve_wsp(z2(), w, 15 + 5 * extra);
    CHECK(again.accepted());
    CHECK(again.iterations == first.iterations);
  }
}

TEST_CASE("esp examples") {
  auto same = solve_esp(z2(), Word::parse("ab"), Word::parse("ab"), 10);
  CHECK(same.accepted());
  CHECK(same.iterations == 0);

  auto z3case = solve_esp(z3(), Word::parse("a"), Word::parse("aaaa"), 10);
  CHECK(z3case.accepted());
  CHECK(FiniteModel::cyclic3().equal(Word::parse("a"), Word::parse("aaaa")));

  auto comm = solve_esp(z2(), Word::parse("ab"), Word::parse("ba"), 10);
  CHECK(comm.accepted());
  check_wsp_witness(comm, reduce(Word::parse("ab") * invert(Word::parse("ba"))));
}

TEST_CASE("msp examples") {
  auto in = solve_msp(z2(), {Word::parse("ab")}, Word::parse("ba"), 10);
  CHECK(in.accepted());
  check_wsp_witness(in, Word::parse("ba"));
  CHECK(AbelianModel(z2()).member({Word::parse("ab")}, Word::parse("ba")));

  auto triv = solve_msp(z2(), {Word::parse("ab")}, Word(), 10);
  CHECK(triv.accepted());
  CHECK(triv.iterations == 0);

  auto out = solve_msp(z2(), {}, Word::parse("a"), 5);
  CHECK(!out.accepted());
}

TEST_CASE("csp examples") {
  auto same = solve_csp(z2(), Word::parse("ab"), Word::parse("ab"), 10);
  CHECK(same.accepted());
  CHECK(same.iterations == 0);
  REQUIRE(same.witness_locus.has_value());
  CHECK(same.witness_locus->second == 0);
  check_csp_witness(same, Word::parse("ab"));

  auto z3case = solve_csp(z3(), Word::parse("a"), Word::parse("aaaa"), 10);
  CHECK(z3case.accepted());
  check_csp_witness(z3case, Word::parse("aaaa"));

  auto no = solve_csp(z2(), Word::parse("a"), Word::parse("b"), 5);
  CHECK(!no.accepted());
  CHECK(no.iterations == 5);
}

TEST_CASE("csp does not accept proper powers") {
  // A loop that reads u2 certifies conjugacy only to a power of u1; these
  // must stay rejected.
  auto power = solve_csp(z2(), Word::parse("a"), Word::parse("aa"), 6);
  CHECK(!power.accepted());

  auto free_power = solve_csp(free2(), Word::parse("a"), Word::parse("aa"), 6);
  CHECK(!free_power.accepted());

  auto inverse = solve_csp(free2(), Word::parse("a"), Word::parse("A"), 6);
  CHECK(!inverse.accepted());
}

TEST_CASE("csp in the free group accepts exactly cyclic rotations") {
  auto rot = solve_csp(free2(), Word::parse("ab"), Word::parse("ba"), 6);
  CHECK(rot.accepted());
  CHECK(rot.iterations == 0);
  check_csp_witness(rot, Word::parse("ba"));

  auto conj = solve_csp(free2(), Word::parse("ab"),
                        reduce(Word::parse("B") * Word::parse("ab") *
                               Word::parse("b")),
                        6);
  CHECK(conj.accepted());
}

TEST_CASE("csp degenerate cyclic reductions delegate to the word problem") {
  auto both = solve_csp(z2(), Word::parse("aA"), Word(), 5);
  CHECK(both.accepted());
  CHECK(both.iterations == 0);

  auto one_side = solve_csp(z3(), Word::parse("aA"), Word::parse("aaa"), 5);
  CHECK(one_side.accepted());  // aaa =_G eps, hence conjugate to eps
  check_csp_witness(one_side, Word::parse("aaa"));

  auto negative = solve_csp(z2(), Word::parse("aA"), Word::parse("a"), 5);
  CHECK(!negative.accepted());
}

TEST_CASE("word choice attack") {
  CHECK(word_choice_attack(z3(), Word(), Word::parse("a"), Word::parse("aaa"),
                           10) == WordChoice::zero);
  CHECK(word_choice_attack(z3(), Word(), Word::parse("a"), Word::parse("aaaa"),
                           10) == WordChoice::one);
  CHECK(word_choice_attack(z2(), Word::parse("a"), Word::parse("b"),
                           Word::parse("a"), 0) == WordChoice::zero);
  CHECK(word_choice_attack(z2(), Word::parse("a"), Word::parse("b"),
                           Word::parse("abab"), 0) == WordChoice::undecided);
}

namespace {

// The solver loop spelled out literally: Gamma_0 = fold(Gamma), then
// Gamma_i = fold(complete(Gamma_{i-1})) until the bases merge.
SolveOutcome literal_membership_solve(const Presentation& p,
                                      const std::vector<Word>& H,
                                      const Word& w, int max_iter) {
  LabeledGraph g = fold(wedge_graph(w, H, p.num_generators));
  SolveOutcome out;
  for (int i = 0;; ++i) {
    if (g.base_out == *g.base_in) {
      out.status = SolveStatus::accepted;
      out.iterations = i;
      out.witness = g;
      out.graph_size = g.num_vertices;
      return out;
    }
    if (i >= max_iter) {
      out.status = SolveStatus::exhausted;
      out.iterations = i;
      out.graph_size = g.num_vertices;
      return out;
    }
    g = fold(complete(g, p));
  }
}

}  // namespace

TEST_CASE("solver loop matches the literal fold-complete iteration") {
  Rng rng(616);
  for (int i = 0; i < 40; ++i) {
    const Presentation& p = (i % 2 == 0) ? z2() : z3();
    Word w = random_word_up_to(p.num_generators, 10, rng);
    std::vector<Word> H;
    if (i % 3 == 0) {
      H.push_back(random_word_up_to(p.num_generators, 5, rng));
    }
    auto fast = solve_msp(p, H, w, 6);
    auto slow = literal_membership_solve(p, H, w, 6);
    CHECK(fast.status == slow.status);
    CHECK(fast.iterations == slow.iterations);
    if (fast.accepted()) {
      CHECK(*fast.witness == *slow.witness);
    }
  }
}

TEST_CASE("cyclic loop scan matches the direct all-pairs walk") {
  Rng rng(515);
  for (int i = 0; i < 50; ++i) {
    Word base = random_word_up_to(2, 10, rng);
    auto g = fold(wedge_graph(base, {random_word_up_to(2, 6, rng)}));
    Word w = random_word(2, 1 + rng.below(6), rng);

    std::set<std::pair<std::int32_t, std::size_t>> fast;
    for_each_cyclic_loop(g, w, [&](std::int32_t v, std::size_t shift) {
      fast.insert({v, shift});
      return false;  // keep enumerating
    });

    std::set<std::pair<std::int32_t, std::size_t>> slow;
    for (std::int32_t v = 0; v < g.num_vertices; ++v) {
      for (std::size_t shift = 0; shift < w.size(); ++shift) {
        auto end = trace(g, v, rotate(w, shift));
        if (end && *end == v) {
          slow.insert({v, shift});
        }
      }
    }
    CHECK(fast == slow);
  }
}

TEST_CASE("completion tower respects the pre-fold size bound") {
  auto p = z3();
  auto g0 = fold(graph_of_word(Word::parse("aaa")));
  auto g = g0;
  std::int64_t bound = g0.num_vertices;
  for (int i = 1; i <= 3; ++i) {
    g = complete(g, p);
    bound *= p.relator_length_sum;
    CHECK(g.num_vertices <= bound);
    g = fold(g);
  }
}

TEST_CASE("solver soundness against exact models on random words") {
  Rng rng(424242);
  AbelianModel z2_model(z2());
  FiniteModel z3_model = FiniteModel::cyclic3();
  int exhausted_yes = 0;

  for (int i = 0; i < 150; ++i) {
    Word w = random_word_up_to(2, 10, rng);
    auto res = solve_wsp(z2(), w, 12);
    if (res.accepted()) {
      CHECK(z2_model.trivial(w));
      check_wsp_witness(res, w);
    } else if (z2_model.trivial(w)) {
      ++exhausted_yes;
    }

    Word v = random_word_up_to(2, 10, rng);
    auto conj = solve_csp(z2(), w.empty() ? Word::parse("a") : w, v, 8);
    if (conj.accepted()) {
      CHECK(z2_model.conjugate(w.empty() ? Word::parse("a") : w, v));
      check_csp_witness(conj, v);
    }
  }

  for (int i = 0; i < 150; ++i) {
    Word w = random_word_up_to(1, 10, rng);
    auto res = solve_wsp(z3(), w, 12);
    if (res.accepted()) {
      CHECK(z3_model.trivial(w));
    } else if (z3_model.trivial(w)) {
      ++exhausted_yes;
    }
  }
  // Exhausted positives are allowed (budget too small) but should be rare.
  CHECK(exhausted_yes <= 5);
}
