#include "flipcount/presentations.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "flipcount/bitset.hpp"
#include "flipcount/errors.hpp"

namespace flipcount {

namespace {

void require_symbols(const LabeledGraph& g, const std::vector<int>& w) {
  for (int a : w) {
    if (a < 0 || a >= g.num_symbols()) {
      throw BadSymbol("symbol id " + std::to_string(a) + " out of range");
    }
  }
}

void sort_unique_edges(LabeledGraph& g) {
  using E = LabeledGraph::Edge;
  std::sort(g.edges.begin(), g.edges.end(), [](const E& a, const E& b) {
    return std::tie(a.src, a.sym, a.dst) < std::tie(b.src, b.sym, b.dst);
  });
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                            [](const E& a, const E& b) {
                              return a.src == b.src && a.sym == b.sym &&
                                     a.dst == b.dst;
                            }),
                g.edges.end());
}

}  // namespace

std::string word_to_string(const LabeledGraph& g, const std::vector<int>& w) {
  bool single = true;
  for (const auto& name : g.alphabet) {
    if (name.size() != 1) single = false;
  }
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single) out += ',';
    out += g.alphabet[w[i]];
  }
  return out;
}

FactorDfa factor_dfa(const LabeledGraph& g) {
  Nfa nfa = forward_word_nfa(g, full_vertex_set(g));
  Dfa d = minimize_dfa(determinize(nfa));
  FactorDfa out;
  out.dfa = d;
  for (int s = 0; s < d.num_states(); ++s) {
    if (!d.accept[s]) {
      if (out.dead >= 0) throw InvariantViolation("two absorbing fail states");
      out.dead = s;
    }
  }
  if (out.dead < 0) {
    int dead = d.num_states();
    out.dfa.accept.push_back(0);
    out.dfa.next.push_back(std::vector<int>(d.nsym, dead));
    out.dead = dead;
  }
  return out;
}

std::vector<std::vector<int>> blocks_of_length(const FactorDfa& f, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  auto rec = [&](auto&& self, int state, int remaining) -> void {
    if (!f.live(state)) return;
    if (remaining == 0) {
      out.push_back(word);
      return;
    }
    for (int a = 0; a < f.dfa.nsym; ++a) {
      word.push_back(a);
      self(self, f.step(state, a), remaining - 1);
      word.pop_back();
    }
  };
  rec(rec, f.initial(), len);
  return out;
}

bool periodic_word_test(const LabeledGraph& g, const std::vector<int>& w) {
  if (w.empty()) throw SchemaError("periodic word must be non-empty");
  require_symbols(g, w);
  int n = g.num_vertices();
  BoolRel rel = BoolRel::identity(n);
  for (int a : w) rel = rel.compose(g.relation(a));
  Bitset s(n);
  for (int v = 0; v < n; ++v) s.set(v);
  for (;;) {
    Bitset next = rel.image(s);
    if (next == s) break;
    s = next;
  }
  return s.any();
}

bool reversal_flip_check(const LabeledGraph& g, const std::vector<int>& tau,
                         std::vector<int>* witness) {
  Dfa lang = forward_language_dfa(g, full_vertex_set(g));
  LabeledGraph mirror = g.reversed().relabeled(tau);
  Dfa mirror_lang = forward_language_dfa(mirror, full_vertex_set(mirror));
  if (same_language(lang, mirror_lang)) return true;
  if (witness) {
    Dfa gap = product(mirror_lang, lang, ProductMode::AndNot);
    auto word = shortest_accepted(gap);
    if (!word) {
      gap = product(lang, mirror_lang, ProductMode::AndNot);
      word = shortest_accepted(gap);
    }
    *witness = word.value_or(std::vector<int>{});
  }
  return false;
}

namespace {

// Vertices are source-anchored paths of 2*radius edges; edges are paths of
// one more edge, remembering the full label window and the center symbol.
struct PathGraph {
  std::vector<std::pair<int, std::vector<int>>> vertices;  // (start, edges)
  struct PathEdge {
    int src;
    int dst;
    std::vector<int> window;
    int center;
  };
  std::vector<PathEdge> edges;
  std::map<std::pair<int, std::vector<int>>, int> index;

  int intern(int start, const std::vector<int>& edge_ids) {
    auto key = std::make_pair(start, edge_ids);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(vertices.size());
    vertices.push_back(key);
    index.emplace(key, id);
    return id;
  }
};

PathGraph enumerate_paths(const LabeledGraph& g, int radius) {
  PathGraph pg;
  int span = 2 * radius + 1;
  auto by_src = g.out_edges_by_vertex();
  std::vector<int> path;
  auto rec = [&](auto&& self, int start, int at) -> void {
    if (static_cast<int>(path.size()) == span) {
      std::vector<int> head(path.begin(), path.end() - 1);
      std::vector<int> tail(path.begin() + 1, path.end());
      int tail_start = g.edges[path[0]].dst;
      PathGraph::PathEdge e;
      e.src = pg.intern(start, head);
      e.dst = pg.intern(tail_start, tail);
      for (int idx : path) e.window.push_back(g.edges[idx].sym);
      e.center = g.edges[path[radius]].sym;
      pg.edges.push_back(std::move(e));
      return;
    }
    for (int idx : by_src[at]) {
      path.push_back(idx);
      self(self, start, g.edges[idx].dst);
      path.pop_back();
    }
  };
  for (int v = 0; v < g.num_vertices(); ++v) rec(rec, v, v);
  return pg;
}

std::string path_vertex_name(const LabeledGraph& g, int start,
                             const std::vector<int>& edge_ids) {
  std::string name = g.vertex_names[start];
  for (int idx : edge_ids) {
    name += ':';
    name += g.alphabet[g.edges[idx].sym];
    name += ':';
    name += g.vertex_names[g.edges[idx].dst];
  }
  return name;
}

int window_value(const std::map<std::vector<int>, int>& window,
                 const std::vector<int>& key) {
  auto it = window.find(key);
  if (it == window.end()) {
    throw InvariantViolation("window lookup missed a realized block");
  }
  return it->second;
}

void check_window_table(const LabeledGraph& g, const FlipSpec& flip,
                        const FactorDfa& fac) {
  if (flip.window.empty()) throw SchemaError("flip window table is empty");
  if (flip.radius < 0) throw SchemaError("flip radius must be non-negative");
  int span = 2 * flip.radius + 1;
  for (const auto& [key, value] : flip.window) {
    if (static_cast<int>(key.size()) != span) {
      throw SchemaError("window key has length " +
                        std::to_string(key.size()) + ", expected " +
                        std::to_string(span));
    }
    require_symbols(g, key);
    if (value < 0 || value >= g.num_symbols()) {
      throw BadSymbol("window value " + std::to_string(value) +
                      " out of range");
    }
    if (!fac.accepts(key)) {
      throw NotABlock("window key " + word_to_string(g, key) +
                      " is not a block of the shift");
    }
  }
  for (const auto& block : blocks_of_length(fac, span)) {
    if (!flip.window.count(block)) {
      throw SchemaError("window table missing block " +
                        word_to_string(g, block));
    }
  }
}

// Graph presenting the image of the shift under the sliding map that reads
// windows left to right, before the built-in coordinate reversal.
LabeledGraph sliding_image_graph(const LabeledGraph& g, const FlipSpec& flip) {
  if (flip.radius == 0) {
    LabeledGraph k = g;
    for (auto& e : k.edges) e.sym = window_value(flip.window, {e.sym});
    return k;
  }
  PathGraph pg = enumerate_paths(g, flip.radius);
  LabeledGraph k;
  k.alphabet = g.alphabet;
  for (const auto& [start, edge_ids] : pg.vertices) {
    k.vertex_names.push_back(path_vertex_name(g, start, edge_ids));
  }
  for (const auto& e : pg.edges) {
    k.edges.push_back({e.src, window_value(flip.window, e.window), e.dst});
  }
  sort_unique_edges(k);
  k.validate();
  return k;
}

void check_image_contained(const LabeledGraph& g, const FlipSpec& flip) {
  LabeledGraph image = sliding_image_graph(g, flip).reversed();
  Dfa image_lang = forward_language_dfa(image, full_vertex_set(image));
  Dfa lang = forward_language_dfa(g, full_vertex_set(g));
  Dfa gap = product(image_lang, lang, ProductMode::AndNot);
  if (auto word = shortest_accepted(gap)) {
    throw NotReversing("image block " + word_to_string(g, *word) +
                       " is not a block of the shift");
  }
}

void check_window_involution(const LabeledGraph& g, const FlipSpec& flip,
                             const FactorDfa& fac) {
  int radius = flip.radius;
  int span = 2 * radius + 1;
  for (const auto& b : blocks_of_length(fac, 4 * radius + 1)) {
    std::vector<int> inner(span);
    for (int k = 0; k < span; ++k) {
      std::vector<int> slice(b.begin() + (2 * radius - k),
                             b.begin() + (4 * radius - k + 1));
      inner[k] = window_value(flip.window, slice);
    }
    int twice = window_value(flip.window, inner);
    if (twice != b[2 * radius]) {
      throw NotInvolution("applying the flip twice at the center of block " +
                          word_to_string(g, b) + " gives " +
                          g.alphabet[twice] + ", expected " +
                          g.alphabet[b[2 * radius]]);
    }
  }
}

}  // namespace

void flip_axiom_check(const LabeledGraph& raw, const FlipSpec& flip) {
  LabeledGraph g = trim_essential(raw);
  if (flip.one_block()) {
    const auto& tau = flip.tau;
    if (static_cast<int>(tau.size()) != g.num_symbols()) {
      throw SchemaError("tau must cover the whole alphabet");
    }
    require_symbols(g, tau);
    for (int a = 0; a < g.num_symbols(); ++a) {
      if (tau[tau[a]] != a) {
        throw NotInvolution("tau is not an involution at symbol " +
                            g.alphabet[a]);
      }
    }
    std::vector<int> witness;
    if (!reversal_flip_check(g, tau, &witness)) {
      throw NotReversing("block " + word_to_string(g, witness) +
                         " separates the shift from its flipped image");
    }
    return;
  }
  FactorDfa fac = factor_dfa(g);
  check_window_table(g, flip, fac);
  check_image_contained(g, flip);
  check_window_involution(g, flip, fac);
}

RecodeResult one_block_recode(const LabeledGraph& raw, const FlipSpec& flip) {
  LabeledGraph g = trim_essential(raw);
  flip_axiom_check(g, flip);
  std::map<std::vector<int>, int> window = flip.window;
  if (flip.one_block()) {
    for (int a = 0; a < g.num_symbols(); ++a) window[{a}] = flip.tau[a];
  }

  // Label every window position with the pair (center symbol, window value).
  LabeledGraph paired;
  std::vector<int> raw_src, raw_dst;
  std::vector<std::pair<int, int>> pairs;
  if (flip.radius == 0) {
    paired.vertex_names = g.vertex_names;
    for (const auto& e : g.edges) {
      raw_src.push_back(e.src);
      raw_dst.push_back(e.dst);
      pairs.push_back({e.sym, window_value(window, {e.sym})});
    }
  } else {
    PathGraph pg = enumerate_paths(g, flip.radius);
    for (const auto& [start, edge_ids] : pg.vertices) {
      paired.vertex_names.push_back(path_vertex_name(g, start, edge_ids));
    }
    for (const auto& e : pg.edges) {
      raw_src.push_back(e.src);
      raw_dst.push_back(e.dst);
      pairs.push_back({e.center, window_value(window, e.window)});
    }
  }
  std::vector<std::pair<int, int>> sorted_pairs = pairs;
  std::sort(sorted_pairs.begin(), sorted_pairs.end());
  sorted_pairs.erase(std::unique(sorted_pairs.begin(), sorted_pairs.end()),
                     sorted_pairs.end());
  std::map<std::pair<int, int>, int> pair_ids;
  for (const auto& p : sorted_pairs) {
    pair_ids.emplace(p, static_cast<int>(pair_ids.size()));
    paired.alphabet.push_back(g.alphabet[p.first] + "|" +
                              g.alphabet[p.second]);
  }
  for (size_t i = 0; i < pairs.size(); ++i) {
    paired.edges.push_back({raw_src[i], pair_ids.at(pairs[i]), raw_dst[i]});
  }
  sort_unique_edges(paired);
  paired.validate();
  paired = trim_essential(paired);

  // Vertices with the same outgoing and incoming label languages present the
  // same continuations, so they can be merged without changing the shift.
  LabeledGraph rev = paired.reversed();
  std::map<std::pair<std::string, std::string>, int> group_ids;
  std::vector<int> group_of(paired.num_vertices());
  std::vector<int> group_rep;
  for (int v = 0; v < paired.num_vertices(); ++v) {
    Bitset one(paired.num_vertices());
    one.set(v);
    std::string fkey = canonical_key(
        minimize_dfa(determinize(forward_word_nfa(paired, one))));
    std::string bkey =
        canonical_key(minimize_dfa(determinize(forward_word_nfa(rev, one))));
    auto key = std::make_pair(fkey, bkey);
    auto it = group_ids.find(key);
    if (it == group_ids.end()) {
      it = group_ids.emplace(key, static_cast<int>(group_rep.size())).first;
      group_rep.push_back(v);
    }
    group_of[v] = it->second;
  }
  LabeledGraph merged;
  merged.alphabet = paired.alphabet;
  for (int rep : group_rep) merged.vertex_names.push_back(paired.vertex_names[rep]);
  for (const auto& e : paired.edges) {
    merged.edges.push_back({group_of[e.src], e.sym, group_of[e.dst]});
  }
  sort_unique_edges(merged);
  merged.validate();

  RecodeResult out;
  out.graph = std::move(merged);
  out.symbol_pairs = sorted_pairs;
  out.flip.radius = 0;
  out.flip.tau.resize(sorted_pairs.size());
  out.projection.resize(sorted_pairs.size());
  for (size_t i = 0; i < sorted_pairs.size(); ++i) {
    auto [a, b] = sorted_pairs[i];
    auto it = pair_ids.find({b, a});
    if (it == pair_ids.end()) {
      throw InvariantViolation("pair alphabet is not closed under swapping");
    }
    out.flip.tau[i] = it->second;
    out.projection[i] = a;
  }
  return out;
}

}  // namespace flipcount
