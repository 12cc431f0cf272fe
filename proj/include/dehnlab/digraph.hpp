#ifndef DEHNLAB_DIGRAPH_HPP_
#define DEHNLAB_DIGRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dehnlab/presentation.hpp"
#include "dehnlab/word.hpp"

namespace dehnlab {

struct GraphEdge {
  std::int32_t src;
  std::int32_t dst;
  int label;  // generator index; traversing backward reads the inverse

  friend bool operator==(const GraphEdge& a, const GraphEdge& b) {
    return a.src == b.src && a.dst == b.dst && a.label == b.label;
  }
};

// A finite labeled X-digraph with base vertices. Every edge is readable in
// both directions (backward traversal reads the inverse letter). Plain value
// type; all operations below are pure functions.
struct LabeledGraph {
  std::int32_t num_vertices = 0;
  int num_generators = 0;
  std::vector<GraphEdge> edges;
  std::int32_t base_out = 0;
  std::optional<std::int32_t> base_in;

  // Per-vertex list of (signed letter code, target).
  std::vector<std::vector<std::pair<std::int8_t, std::int32_t>>> adjacency()
      const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);
};

// The path graph of w: |w| edges, |w|+1 vertices, base_out the first vertex
// and base_in the last. num_generators defaults to the widest letter used.
LabeledGraph graph_of_word(const Word& w, int num_generators = -1);

// Gamma(w, h_1..h_k): the path of w plus a loop at base_out for each h_i.
LabeledGraph wedge_graph(const Word& w, const std::vector<Word>& H,
                         int num_generators = -1);

// The cycle of w: path of w with first and last vertex identified. Both base
// vertices sit at the identification point.
LabeledGraph cycle_graph(const Word& w, int num_generators = -1);

// No vertex has two outgoing (equivalently incoming) edges with equal label.
bool is_folded(const LabeledGraph& g);

// Stallings folding: iterated merging of equal-label siblings via union-find,
// output renumbered by BFS from base_out. Idempotent; the result does not
// depend on edge order (tested by permutation invariance). If image is given,
// it receives the map old vertex -> folded vertex.
LabeledGraph fold(const LabeledGraph& g,
                  std::vector<std::int32_t>* image = nullptr);

// R-completion: attaches, at every vertex of g, one fresh loop per relator of
// the symmetrized set. The input is a subgraph of the output and
// |complete(g)| <= |g| * L(R) whenever L(R) >= 1.
LabeledGraph complete(const LabeledGraph& g, const Presentation& p);

// Deterministic reading in a folded graph: the end vertex if all of w is
// readable from start, absent otherwise. Throws if g is not folded.
std::optional<std::int32_t> trace(const LabeledGraph& g, std::int32_t start,
                                  const Word& w);

// Line-oriented debug form: "v <id>", "e <src> <dst> <letter>",
// "base_out <id>", "base_in <id>".
std::string dump_graph(const LabeledGraph& g,
                       std::string_view alphabet = Word::kFullAlphabet);
LabeledGraph parse_graph(const std::string& text,
                         std::string_view alphabet = Word::kFullAlphabet);

// The mutable folding machine behind fold() and the solvers. Holds a
// union-find over vertices plus one adjacency slot per signed letter;
// stored targets may be stale (merged away) and are normalized through
// find() on read. The state is folded whenever the pending queue is empty.
class FoldingState {
 public:
  FoldingState(const LabeledGraph& g, int num_generators);

  std::int32_t find(std::int32_t v) const;
  std::int32_t base_out() const { return find(base_out_); }
  std::int32_t base_in() const { return find(base_in_); }
  bool bases_merged() const { return base_out() == base_in(); }
  std::int64_t live_vertices() const { return live_; }

  // Target of the signed letter at v, normalized, or -1.
  std::int32_t target(std::int32_t v, std::int8_t code) const;

  // One round of S(C(.)): attach every relator loop at every current vertex,
  // folding as it goes. Equivalent to fold(complete(snapshot(), p)) but
  // avoids materializing the unfolded intermediate: a loop whose label is
  // already readable costs one walk, and a partially readable one only
  // splices the missing middle.
  void complete_step(const Presentation& p);

  LabeledGraph snapshot(std::vector<std::int32_t>* image = nullptr) const;

 private:
  std::int32_t add_vertex();
  void insert_edge(std::int32_t u, std::int8_t code, std::int32_t v);
  void attach_loop(std::int32_t v, const Word& r);
  void drain();
  int slot(std::int8_t code) const {
    int gen = (code < 0 ? -code : code) - 1;
    return 2 * gen + (code < 0 ? 1 : 0);
  }

  int stride_;
  mutable std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
  std::vector<std::int32_t> adj_;  // num_vertices * stride_, -1 = absent
  std::vector<std::pair<std::int32_t, std::int32_t>> pending_;
  std::int64_t live_ = 0;
  std::int32_t base_out_ = 0;
  std::int32_t base_in_ = 0;
  std::vector<std::int32_t> scratch_fwd_, scratch_bwd_;
};

}  // namespace dehnlab

#endif  // DEHNLAB_DIGRAPH_HPP_
