#include "flipcount/labeled_graph.hpp"

#include <algorithm>
#include <set>

#include "flipcount/errors.hpp"

namespace flipcount {

void LabeledGraph::validate() const {
  std::set<std::string> names(vertex_names.begin(), vertex_names.end());
  if ((int)names.size() != num_vertices())
    throw SchemaError("duplicate vertex name");
  std::set<std::string> syms(alphabet.begin(), alphabet.end());
  if ((int)syms.size() != num_symbols()) throw SchemaError("duplicate symbol");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= num_vertices() || e.dst < 0 ||
        e.dst >= num_vertices())
      throw SchemaError("edge endpoint out of range");
    if (e.sym < 0 || e.sym >= num_symbols())
      throw BadSymbol("edge label out of range");
    if (!seen.insert({e.src, e.sym, e.dst}).second)
      throw SchemaError("duplicate edge (source, label, target)");
  }
}

BoolRel LabeledGraph::relation(int sym) const {
  BoolRel r(num_vertices());
  for (const auto& e : edges)
    if (e.sym == sym) r.set(e.src, e.dst);
  return r;
}

LabeledGraph LabeledGraph::reversed() const {
  LabeledGraph g;
  g.alphabet = alphabet;
  g.vertex_names = vertex_names;
  g.edges.reserve(edges.size());
  for (const auto& e : edges) g.edges.push_back({e.dst, e.sym, e.src});
  return g;
}

LabeledGraph LabeledGraph::relabeled(const std::vector<int>& tau) const {
  LabeledGraph g = *this;
  for (auto& e : g.edges) e.sym = tau.at(e.sym);
  return g;
}

std::vector<std::vector<int>> LabeledGraph::out_edges_by_vertex() const {
  std::vector<std::vector<int>> out(num_vertices());
  for (int i = 0; i < (int)edges.size(); ++i) out[edges[i].src].push_back(i);
  return out;
}

std::vector<std::vector<int>> LabeledGraph::in_edges_by_vertex() const {
  std::vector<std::vector<int>> in(num_vertices());
  for (int i = 0; i < (int)edges.size(); ++i) in[edges[i].dst].push_back(i);
  return in;
}

bool LabeledGraph::is_essential() const {
  std::vector<int> outdeg(num_vertices(), 0), indeg(num_vertices(), 0);
  for (const auto& e : edges) {
    ++outdeg[e.src];
    ++indeg[e.dst];
  }
  for (int v = 0; v < num_vertices(); ++v)
    if (outdeg[v] == 0 || indeg[v] == 0) return false;
  return num_vertices() > 0;
}

bool LabeledGraph::strongly_connected() const {
  int n = num_vertices();
  if (n == 0) return false;
  auto reach = [&](bool fwd) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        int from = fwd ? e.src : e.dst;
        int to = fwd ? e.dst : e.src;
        if (from == v && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
    return seen;
  };
  auto f = reach(true), b = reach(false);
  for (int v = 0; v < n; ++v)
    if (!f[v] || !b[v]) return false;
  return true;
}

LabeledGraph trim_essential(const LabeledGraph& g,
                            std::vector<int>* kept_vertices) {
  g.validate();
  int n = g.num_vertices();
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> outdeg(n, 0), indeg(n, 0);
    for (const auto& e : g.edges)
      if (alive[e.src] && alive[e.dst]) {
        ++outdeg[e.src];
        ++indeg[e.dst];
      }
    for (int v = 0; v < n; ++v)
      if (alive[v] && (outdeg[v] == 0 || indeg[v] == 0)) {
        alive[v] = 0;
        changed = true;
      }
  }
  std::vector<int> remap(n, -1), kept;
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      remap[v] = (int)kept.size();
      kept.push_back(v);
    }
  if (kept.empty()) throw EmptyShift("presentation trims to the empty graph");
  LabeledGraph out;
  out.alphabet = g.alphabet;
  for (int v : kept) out.vertex_names.push_back(g.vertex_names[v]);
  for (const auto& e : g.edges)
    if (alive[e.src] && alive[e.dst])
      out.edges.push_back({remap[e.src], e.sym, remap[e.dst]});
  if (kept_vertices) *kept_vertices = kept;
  return out;
}

}  // namespace flipcount
