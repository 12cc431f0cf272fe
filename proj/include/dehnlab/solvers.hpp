#ifndef DEHNLAB_SOLVERS_HPP_
#define DEHNLAB_SOLVERS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dehnlab/digraph.hpp"
#include "dehnlab/presentation.hpp"
#include "dehnlab/word.hpp"

namespace dehnlab {

enum class SolveStatus { accepted, exhausted };

// Outcome of a completion/folding solve. Accepted outcomes carry a witness
// graph that re-traces the instance; Exhausted carries no claim that the
// instance is negative (the problems are only semi-decidable).
struct SolveOutcome {
  SolveStatus status = SolveStatus::exhausted;
  std::optional<LabeledGraph> witness;
  int iterations = 0;
  // CSP only: (vertex, cyclic shift of the second word) where the loop reads.
  std::optional<std::pair<std::int32_t, std::size_t>> witness_locus;
  std::int64_t graph_size = 0;  // vertices of the final graph

  bool accepted() const { return status == SolveStatus::accepted; }
};

inline constexpr int kDefaultMaxIterations = 20;

// One word-problem (or membership) completion run: Gamma_0 = S(Gamma), then
// Gamma_i = S(C(Gamma_{i-1})) until the base vertices merge. Incremental so
// callers can interleave two runs.
class CompletionRun {
 public:
  CompletionRun(const LabeledGraph& base, const Presentation& p);

  bool accepted() const { return state_.bases_merged(); }
  void step();
  int iterations() const { return iterations_; }
  std::int64_t live_vertices() const { return state_.live_vertices(); }
  LabeledGraph snapshot() const { return state_.snapshot(); }

 private:
  const Presentation& pres_;
  FoldingState state_;
  int iterations_ = 0;
};

// Annular run for the conjugacy search problem: completion of the cycle of
// u1, scanning after every round for a vertex and cyclic shift of u2 that
// read as a loop. A loop alone only certifies conjugacy to a *power* of u1,
// so each candidate is verified by extracting a connecting path g and
// running a word-problem check on g^-1 u1 g (shifted u2)^-1; acceptance is
// reported only for verified candidates.
class ConjugacyRun {
 public:
  ConjugacyRun(const Presentation& p, Word u1, Word u2, int verify_budget);

  // Scans (and on first use also before any completion round). Returns true
  // once a verified locus exists.
  bool scan();
  void step();
  int iterations() const { return iterations_; }
  const std::optional<std::pair<std::int32_t, std::size_t>>& locus() const {
    return locus_;
  }
  LabeledGraph snapshot() const { return state_.snapshot(); }
  std::int64_t live_vertices() const { return state_.live_vertices(); }

 private:
  bool verify_candidate(const LabeledGraph& g, std::int32_t vertex,
                        std::size_t shift);

  const Presentation& pres_;
  Word u1_, u2_;
  int verify_budget_;
  FoldingState state_;
  int iterations_ = 0;
  std::optional<std::pair<std::int32_t, std::size_t>> locus_;
  std::set<std::vector<std::int8_t>> rejected_checks_;
};

// A_WP: accepts iff w =_G eps within max_iter rounds, with the final graph
// accepting w as a loop at the base vertex.
SolveOutcome solve_wsp(const Presentation& p, const Word& w, int max_iter);

// Equivalence reduces to the word problem on w1 w2^-1.
SolveOutcome solve_esp(const Presentation& p, const Word& w1, const Word& w2,
                       int max_iter);

// A_MP on the wedge of w and the subgroup generators; A_WP is the H = {}
// case.
SolveOutcome solve_msp(const Presentation& p, const std::vector<Word>& H,
                       const Word& w, int max_iter);

// A_CP reconstruction; see ConjugacyRun. Degenerate cases (either side
// cyclically trivial) delegate to the word problem.
SolveOutcome solve_csp(const Presentation& p, const Word& w1, const Word& w2,
                       int max_iter);

// Visits every (vertex, shift) pair at which the shift-rotated word reads
// as a loop in the folded graph, shifts ascending then vertices ascending,
// until the visitor returns true. Runs in O(|w| * |V|) through prefix and
// suffix walk-function composition.
void for_each_cyclic_loop(
    const LabeledGraph& g, const Word& w,
    const std::function<bool(std::int32_t, std::size_t)>& visit);

enum class WordChoice { zero, one, undecided };

// Decides which of w0, w1 equals w in G, under the promise that exactly one
// does: two word-problem runs advance in lockstep, one completion round
// each per round, and the first to accept wins. A same-round tie returns
// zero. Exhausting the budget with neither accepting is undecided.
WordChoice word_choice_attack(const Presentation& p, const Word& w0,
                              const Word& w1, const Word& w, int step_budget);

// The conjugacy analogue used by the PKC variant: lockstep pair of
// ConjugacyRuns against w0 and w1.
WordChoice conjugacy_choice(const Presentation& p, const Word& w0,
                            const Word& w1, const Word& w, int step_budget);

}  // namespace dehnlab

#endif  // DEHNLAB_SOLVERS_HPP_
