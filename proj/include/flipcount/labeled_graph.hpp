#ifndef FLIPCOUNT_LABELED_GRAPH_HPP
#define FLIPCOUNT_LABELED_GRAPH_HPP

#include <string>
#include <vector>

#include "flipcount/bitset.hpp"

namespace flipcount {

// Finite directed graph with edge labels drawn from a fixed alphabet.
// Vertices, symbols and edges keep their input order; every construction
// downstream is a deterministic function of that order.
struct LabeledGraph {
  struct Edge {
    int src;
    int sym;
    int dst;
  };

  std::vector<std::string> alphabet;
  std::vector<std::string> vertex_names;
  std::vector<Edge> edges;

  int num_vertices() const { return (int)vertex_names.size(); }
  int num_symbols() const { return (int)alphabet.size(); }

  // Throws SchemaError on out-of-range ids or duplicate (src, sym, dst).
  void validate() const;

  // Per-symbol successor relation on vertices.
  BoolRel relation(int sym) const;

  // Same vertices, every edge turned around.
  LabeledGraph reversed() const;

  // Edge labels rewritten through a symbol involution.
  LabeledGraph relabeled(const std::vector<int>& tau) const;

  bool is_essential() const;
  bool strongly_connected() const;

  std::vector<std::vector<int>> out_edges_by_vertex() const;  // edge indices
  std::vector<std::vector<int>> in_edges_by_vertex() const;
};

// Iteratively deletes vertices with no incoming or no outgoing edge.
// Throws EmptyShift if nothing survives.  kept_vertices, when non-null,
// receives the surviving original vertex ids in order.
LabeledGraph trim_essential(const LabeledGraph& g,
                            std::vector<int>* kept_vertices = nullptr);

}  // namespace flipcount

#endif
