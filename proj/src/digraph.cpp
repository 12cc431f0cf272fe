#include "dehnlab/digraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace dehnlab {

namespace {

int infer_generators(std::initializer_list<const Word*> words, int given) {
  if (given >= 0) {
    return given;
  }
  int m = 0;
  for (const Word* w : words) {
    for (std::size_t i = 0; i < w->size(); ++i) {
      m = std::max(m, (*w)[i].generator() + 1);
    }
  }
  return m;
}

}  // namespace

std::vector<std::vector<std::pair<std::int8_t, std::int32_t>>>
LabeledGraph::adjacency() const {
  std::vector<std::vector<std::pair<std::int8_t, std::int32_t>>> adj(
      static_cast<std::size_t>(num_vertices));
  for (const auto& e : edges) {
    auto code = static_cast<std::int8_t>(e.label + 1);
    adj[static_cast<std::size_t>(e.src)].emplace_back(code, e.dst);
    adj[static_cast<std::size_t>(e.dst)].emplace_back(
        static_cast<std::int8_t>(-code), e.src);
  }
  return adj;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.num_vertices != b.num_vertices || a.base_out != b.base_out ||
      a.base_in != b.base_in) {
    return false;
  }
  auto key = [](const GraphEdge& e) {
    return std::tuple(e.src, e.dst, e.label);
  };
  auto ea = a.edges;
  auto eb = b.edges;
  auto lt = [&](const GraphEdge& x, const GraphEdge& y) {
    return key(x) < key(y);
  };
  std::sort(ea.begin(), ea.end(), lt);
  std::sort(eb.begin(), eb.end(), lt);
  return ea == eb;
}

LabeledGraph graph_of_word(const Word& w, int num_generators) {
  LabeledGraph g;
  g.num_generators = infer_generators({&w}, num_generators);
  g.num_vertices = static_cast<std::int32_t>(w.size()) + 1;
  g.edges.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w[i];
    auto a = static_cast<std::int32_t>(i);
    // A negative letter is the reverse traversal of a positive edge.
    if (l.sign() > 0) {
      g.edges.push_back({a, a + 1, l.generator()});
    } else {
      g.edges.push_back({a + 1, a, l.generator()});
    }
  }
  g.base_out = 0;
  g.base_in = g.num_vertices - 1;
  return g;
}

LabeledGraph wedge_graph(const Word& w, const std::vector<Word>& H,
                         int num_generators) {
  int gens = num_generators;
  if (gens < 0) {
    gens = infer_generators({&w}, -1);
    for (const auto& h : H) {
      gens = std::max(gens, infer_generators({&h}, -1));
    }
  }
  LabeledGraph g = graph_of_word(w, gens);
  for (const auto& h : H) {
    if (h.empty()) {
      continue;
    }
    // Loop at base_out: |h| edges through |h|-1 fresh vertices.
    std::int32_t prev = g.base_out;
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::int32_t next = (i + 1 == h.size()) ? g.base_out : g.num_vertices++;
      Letter l = h[i];
      if (l.sign() > 0) {
        g.edges.push_back({prev, next, l.generator()});
      } else {
        g.edges.push_back({next, prev, l.generator()});
      }
      prev = next;
    }
  }
  return g;
}

LabeledGraph cycle_graph(const Word& w, int num_generators) {
  LabeledGraph g;
  g.num_generators = infer_generators({&w}, num_generators);
  g.num_vertices = std::max<std::int32_t>(1, static_cast<std::int32_t>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto a = static_cast<std::int32_t>(i);
    auto b = static_cast<std::int32_t>((i + 1) % w.size());
    Letter l = w[i];
    if (l.sign() > 0) {
      g.edges.push_back({a, b, l.generator()});
    } else {
      g.edges.push_back({b, a, l.generator()});
    }
  }
  g.base_out = 0;
  g.base_in = 0;
  return g;
}

bool is_folded(const LabeledGraph& g) {
  auto adj = g.adjacency();
  std::vector<char> seen(2 * static_cast<std::size_t>(g.num_generators) + 2);
  for (const auto& row : adj) {
    std::fill(seen.begin(), seen.end(), 0);
    for (auto [code, dst] : row) {
      int gen = (code < 0 ? -code : code) - 1;
      std::size_t s = 2 * static_cast<std::size_t>(gen) + (code < 0 ? 1 : 0);
      if (seen[s]) {
        return false;
      }
      seen[s] = 1;
    }
  }
  return true;
}

LabeledGraph fold(const LabeledGraph& g, std::vector<std::int32_t>* image) {
  FoldingState st(g, g.num_generators);
  return st.snapshot(image);
}

LabeledGraph complete(const LabeledGraph& g, const Presentation& p) {
  LabeledGraph out = g;
  out.num_generators = std::max(out.num_generators, p.num_generators);
  std::int32_t original = g.num_vertices;
  for (std::int32_t v = 0; v < original; ++v) {
    for (const auto& r : p.relators) {
      std::int32_t prev = v;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::int32_t next = (i + 1 == r.size()) ? v : out.num_vertices++;
        Letter l = r[i];
        if (l.sign() > 0) {
          out.edges.push_back({prev, next, l.generator()});
        } else {
          out.edges.push_back({next, prev, l.generator()});
        }
        prev = next;
      }
    }
  }
  return out;
}

std::optional<std::int32_t> trace(const LabeledGraph& g, std::int32_t start,
                                  const Word& w) {
  if (!is_folded(g)) {
    throw std::invalid_argument("trace requires a folded graph");
  }
  if (start < 0 || start >= g.num_vertices) {
    throw std::invalid_argument("trace start vertex out of range");
  }
  auto adj = g.adjacency();
  std::int32_t cur = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::int8_t code = w[i].code();
    std::int32_t next = -1;
    for (auto [c, dst] : adj[static_cast<std::size_t>(cur)]) {
      if (c == code) {
        next = dst;
        break;
      }
    }
    if (next < 0) {
      return std::nullopt;
    }
    cur = next;
  }
  return cur;
}

std::string dump_graph(const LabeledGraph& g, std::string_view alphabet) {
  std::ostringstream out;
  for (std::int32_t v = 0; v < g.num_vertices; ++v) {
    out << "v " << v << '\n';
  }
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.src, a.dst, a.label) < std::tuple(b.src, b.dst, b.label);
  });
  for (const auto& e : edges) {
    out << "e " << e.src << ' ' << e.dst << ' '
        << alphabet.at(static_cast<std::size_t>(e.label)) << '\n';
  }
  out << "base_out " << g.base_out << '\n';
  if (g.base_in) {
    out << "base_in " << *g.base_in << '\n';
  }
  return out.str();
}

LabeledGraph parse_graph(const std::string& text, std::string_view alphabet) {
  LabeledGraph g;
  std::istringstream in(text);
  std::string kw;
  std::int32_t max_vertex = -1;
  while (in >> kw) {
    if (kw == "v") {
      std::int32_t id;
      in >> id;
      max_vertex = std::max(max_vertex, id);
    } else if (kw == "e") {
      std::int32_t s, d;
      std::string letter;
      in >> s >> d >> letter;
      auto pos = alphabet.find(letter.at(0));
      if (letter.size() != 1 || pos == std::string_view::npos) {
        throw std::invalid_argument("bad edge letter: " + letter);
      }
      g.edges.push_back({s, d, static_cast<int>(pos)});
      g.num_generators = std::max(g.num_generators, static_cast<int>(pos) + 1);
      max_vertex = std::max({max_vertex, s, d});
    } else if (kw == "base_out") {
      in >> g.base_out;
    } else if (kw == "base_in") {
      std::int32_t b;
      in >> b;
      g.base_in = b;
    } else {
      throw std::invalid_argument("bad graph directive: " + kw);
    }
  }
  g.num_vertices = max_vertex + 1;
  return g;
}

// --- FoldingState -----------------------------------------------------------

FoldingState::FoldingState(const LabeledGraph& g, int num_generators)
    : stride_(2 * num_generators) {
  if (num_generators < g.num_generators) {
    throw std::invalid_argument("graph labels exceed presentation alphabet");
  }
  parent_.resize(static_cast<std::size_t>(g.num_vertices));
  for (std::int32_t v = 0; v < g.num_vertices; ++v) {
    parent_[static_cast<std::size_t>(v)] = v;
  }
  size_.assign(static_cast<std::size_t>(g.num_vertices), 1);
  adj_.assign(static_cast<std::size_t>(g.num_vertices) *
                  static_cast<std::size_t>(stride_),
              -1);
  live_ = g.num_vertices;
  base_out_ = g.base_out;
  base_in_ = g.base_in.value_or(g.base_out);
  for (const auto& e : g.edges) {
    insert_edge(e.src, static_cast<std::int8_t>(e.label + 1), e.dst);
  }
  drain();
}

std::int32_t FoldingState::find(std::int32_t v) const {
  while (parent_[static_cast<std::size_t>(v)] != v) {
    parent_[static_cast<std::size_t>(v)] =
        parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
    v = parent_[static_cast<std::size_t>(v)];
  }
  return v;
}

std::int32_t FoldingState::target(std::int32_t v, std::int8_t code) const {
  std::int32_t t = adj_[static_cast<std::size_t>(find(v)) *
                            static_cast<std::size_t>(stride_) +
                        static_cast<std::size_t>(slot(code))];
  return t < 0 ? -1 : find(t);
}

std::int32_t FoldingState::add_vertex() {
  auto v = static_cast<std::int32_t>(parent_.size());
  parent_.push_back(v);
  size_.push_back(1);
  adj_.insert(adj_.end(), static_cast<std::size_t>(stride_), -1);
  ++live_;
  return v;
}

void FoldingState::insert_edge(std::int32_t u, std::int8_t code,
                               std::int32_t v) {
  std::int32_t ru = find(u);
  std::int32_t rv = find(v);
  auto fwd = static_cast<std::size_t>(ru) * static_cast<std::size_t>(stride_) +
             static_cast<std::size_t>(slot(code));
  if (adj_[fwd] < 0) {
    adj_[fwd] = rv;
  } else if (std::int32_t cur = find(adj_[fwd]); cur != rv) {
    pending_.emplace_back(cur, rv);
  }
  auto bwd = static_cast<std::size_t>(rv) * static_cast<std::size_t>(stride_) +
             static_cast<std::size_t>(slot(static_cast<std::int8_t>(-code)));
  if (adj_[bwd] < 0) {
    adj_[bwd] = ru;
  } else if (std::int32_t cur = find(adj_[bwd]); cur != ru) {
    pending_.emplace_back(cur, ru);
  }
}

void FoldingState::drain() {
  while (!pending_.empty()) {
    auto [x, y] = pending_.back();
    pending_.pop_back();
    std::int32_t a = find(x);
    std::int32_t b = find(y);
    if (a == b) {
      continue;
    }
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) {
      std::swap(a, b);
    }
    // Merge b's row into a's; equal-label disagreements queue further merges.
    auto row_a = static_cast<std::size_t>(a) * static_cast<std::size_t>(stride_);
    auto row_b = static_cast<std::size_t>(b) * static_cast<std::size_t>(stride_);
    for (int s = 0; s < stride_; ++s) {
      std::int32_t tb = adj_[row_b + static_cast<std::size_t>(s)];
      if (tb < 0) {
        continue;
      }
      std::int32_t& ta = adj_[row_a + static_cast<std::size_t>(s)];
      if (ta < 0) {
        ta = tb;
      } else {
        std::int32_t fa = find(ta);
        std::int32_t fb = find(tb);
        if (fa != fb) {
          pending_.emplace_back(fa, fb);
        }
      }
    }
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --live_;
  }
}

void FoldingState::attach_loop(std::int32_t v, const Word& r) {
  v = find(v);
  auto m = r.size();
  auto& fwd = scratch_fwd_;
  auto& bwd = scratch_bwd_;
  fwd.assign(m + 1, -1);
  bwd.assign(m + 1, -1);
  fwd[0] = v;
  std::size_t f = 0;
  while (f < m) {
    std::int32_t t = target(fwd[f], r[f].code());
    if (t < 0) {
      break;
    }
    fwd[f + 1] = t;
    ++f;
  }
  if (f == m && fwd[m] == v) {
    return;  // loop already present
  }
  bwd[m] = v;
  std::size_t b = m;
  while (b > f) {
    std::int32_t t = target(bwd[b], r[b - 1].inverse().code());
    if (t < 0) {
      break;
    }
    bwd[b - 1] = t;
    --b;
  }
  if (f < b) {
    // Splice the unreadable middle r[f..b). The walk stops keep the two
    // boundary slots free individually, but when fwd[f] == bwd[b] and the
    // segment starts and ends with mutually inverse letters the first and
    // last fresh edges land on the same slot there, so the insert can still
    // queue a merge; drain handles it.
    std::int32_t prev = fwd[f];
    for (std::size_t i = f; i + 1 < b; ++i) {
      std::int32_t fresh = add_vertex();
      insert_edge(prev, r[i].code(), fresh);
      prev = fresh;
    }
    insert_edge(prev, r[b - 1].code(), bwd[b]);
    drain();
  } else {
    // Folding the fresh loop identifies position i with both walk images.
    for (std::size_t i = b; i <= f; ++i) {
      std::int32_t x = find(fwd[i]);
      std::int32_t y = find(bwd[i]);
      if (x != y) {
        pending_.emplace_back(x, y);
      }
    }
    drain();
  }
}

void FoldingState::complete_step(const Presentation& p) {
  if (2 * p.num_generators > stride_) {
    throw std::invalid_argument("presentation alphabet exceeds folding state");
  }
  // Loops attach at every vertex of the graph as it was when the round
  // started; vertices merged mid-round are reached through find().
  std::vector<std::int32_t> reps;
  reps.reserve(static_cast<std::size_t>(live_));
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(parent_.size()); ++v) {
    if (find(v) == v) {
      reps.push_back(v);
    }
  }
  for (std::int32_t v : reps) {
    for (const auto& r : p.relators) {
      attach_loop(v, r);
    }
  }
}

LabeledGraph FoldingState::snapshot(std::vector<std::int32_t>* image) const {
  auto total = static_cast<std::int32_t>(parent_.size());
  std::vector<std::int32_t> canonical(static_cast<std::size_t>(total), -1);
  std::deque<std::int32_t> queue;
  std::int32_t next_id = 0;
  auto push = [&](std::int32_t v) {
    v = find(v);
    if (canonical[static_cast<std::size_t>(v)] < 0) {
      canonical[static_cast<std::size_t>(v)] = next_id++;
      queue.push_back(v);
    }
  };
  push(base_out_);
  push(base_in_);
  auto bfs = [&] {
    while (!queue.empty()) {
      std::int32_t v = queue.front();
      queue.pop_front();
      auto row = static_cast<std::size_t>(v) * static_cast<std::size_t>(stride_);
      for (int s = 0; s < stride_; ++s) {
        std::int32_t t = adj_[row + static_cast<std::size_t>(s)];
        if (t >= 0) {
          push(t);
        }
      }
    }
  };
  bfs();
  for (std::int32_t v = 0; v < total; ++v) {
    if (find(v) == v && canonical[static_cast<std::size_t>(v)] < 0) {
      push(v);
      bfs();
    }
  }

  LabeledGraph g;
  g.num_generators = stride_ / 2;
  g.num_vertices = next_id;
  g.base_out = canonical[static_cast<std::size_t>(find(base_out_))];
  g.base_in = canonical[static_cast<std::size_t>(find(base_in_))];
  for (std::int32_t v = 0; v < total; ++v) {
    if (find(v) != v) {
      continue;
    }
    auto row = static_cast<std::size_t>(v) * static_cast<std::size_t>(stride_);
    for (int s = 0; s < stride_; s += 2) {  // positive slots only: one per edge
      std::int32_t t = adj_[row + static_cast<std::size_t>(s)];
      if (t >= 0) {
        g.edges.push_back({canonical[static_cast<std::size_t>(v)],
                           canonical[static_cast<std::size_t>(find(t))],
                           s / 2});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.src, a.dst, a.label) < std::tuple(b.src, b.dst, b.label);
  });
  if (image != nullptr) {
    image->assign(static_cast<std::size_t>(total), -1);
    for (std::int32_t v = 0; v < total; ++v) {
      (*image)[static_cast<std::size_t>(v)] =
          canonical[static_cast<std::size_t>(find(v))];
    }
  }
  return g;
}

}  // namespace dehnlab
