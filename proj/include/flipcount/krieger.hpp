#ifndef FLIPCOUNT_KRIEGER_HPP
#define FLIPCOUNT_KRIEGER_HPP

#include <map>
#include <string>
#include <vector>

#include "flipcount/dfa.hpp"
#include "flipcount/labeled_graph.hpp"
#include "flipcount/matrix.hpp"
#include "flipcount/presentations.hpp"

namespace flipcount {

// Follower classes of one-sided rays, computed on a fixed graph orientation.
// Classes are identified by the canonical key of their forward language;
// members holds a representative vertex subset per class.
struct RayClasses {
  std::vector<Bitset> members;
  std::vector<std::string> keys;
  std::vector<Dfa> languages;
  std::vector<std::vector<int>> witnesses;
  std::vector<std::vector<int>> step;     // [class][symbol], -1 when absent
  std::vector<Bitset> first_symbols;
  std::map<std::string, int> by_key;

  int size() const { return static_cast<int>(members.size()); }
  int find(const std::string& key) const;
};

// Enumerates ray classes: images of idempotent relations of the transition
// monoid, closed forward under symbols, deduplicated by language.  Reads the
// element cap from FLIPCOUNT_MONOID_CAP (default one million) and throws
// MonoidBlowup past it.
RayClasses compute_ray_classes(const LabeledGraph& g);

struct ChainState {
  int future;
  int symbol;
  int past;

  bool operator==(const ChainState&) const = default;
};

// Shift of finite type carrying the flip structure: 0/1 transition matrix A,
// state involution star with its permutation matrix J, and a symbol read at
// every state.
struct JointStateChain {
  std::vector<ChainState> states;
  std::vector<std::string> alphabet;
  std::vector<int> tau;
  IntMatrix A;
  IntMatrix J;
  std::vector<int> star;

  int num_states() const { return static_cast<int>(states.size()); }
  std::string state_name(int i) const;
};

struct KriegerAnalysis {
  LabeledGraph graph;  // trimmed essential copy the chain was built from
  std::vector<int> tau;
  RayClasses futures;
  RayClasses pasts;             // computed on the reversed graph
  std::vector<int> star_future;  // future class id -> past class id
  std::vector<int> star_past;
  JointStateChain joint;
};

// Builds the joint chain over all compatible (future, symbol, past) triples
// and verifies its structural invariants.
KriegerAnalysis analyze(const LabeledGraph& g, const std::vector<int>& tau);

// True iff no two distinct equally labeled paths share both endpoints.
bool diamond_free(const JointStateChain& chain);

// Vertex-labeled view of the chain: edge s -> t reads the symbol of s.
LabeledGraph chain_to_graph(const JointStateChain& chain);

// True iff every block that reads w afterwards agrees on its continuation,
// regardless of what preceded.  Throws NotABlock when w is not a block.
bool is_intrinsically_synchronizing(const FactorDfa& fac,
                                    const std::vector<int>& w);

struct Restriction {
  JointStateChain chain;
  std::vector<int> origin;  // positions in the parent chain's state list
  bool factors_onto;
};

// Restriction to states whose rays are realized by synchronizing words.
// factors_onto records whether the restricted labeling still presents the
// whole shift; it is asserted when the input graph is irreducible.
Restriction build_finitary_chain(const KriegerAnalysis& k);

// Restriction of the finitary chain to its distinguished irreducible part.
// Throws NotIrreducible when the presenting graph is not irreducible.
Restriction build_irreducible_component(const KriegerAnalysis& k,
                                        const Restriction& finitary);

}  // namespace flipcount

#endif
