#ifndef FLIPCOUNT_DFA_HPP
#define FLIPCOUNT_DFA_HPP

#include <optional>
#include <string>
#include <vector>

#include "flipcount/bitset.hpp"
#include "flipcount/labeled_graph.hpp"

namespace flipcount {

struct Nfa {
  int nsym = 0;
  std::vector<std::vector<Bitset>> next;  // [state][sym] -> successor set
  Bitset initial;
  Bitset accept;

  int num_states() const { return (int)next.size(); }
};

// Complete deterministic automaton; every state has a transition on every
// symbol.  States are numbered in construction order, which downstream code
// relies on for reproducibility.
struct Dfa {
  int nsym = 0;
  std::vector<std::vector<int>> next;
  std::vector<char> accept;
  int initial = 0;

  int num_states() const { return (int)next.size(); }
  int step(int s, int a) const { return next[s][a]; }
  int run(const std::vector<int>& word) const;
  bool accepts(const std::vector<int>& word) const;
};

// Subset construction; states appear in breadth-first discovery order.
Dfa determinize(const Nfa& nfa);

// Drops unreachable states, then merges right-language-equivalent ones.
Dfa minimize_dfa(const Dfa& d);

// Renumbers states in breadth-first order from the initial state.
Dfa canonicalize(const Dfa& d);

// Canonical form of the language: serialization of the canonicalized
// minimal automaton.  Two automata have equal languages iff keys match.
std::string canonical_key(const Dfa& d);

bool same_language(const Dfa& a, const Dfa& b);
bool language_empty(const Dfa& d);

// Shortest accepted word, or nullopt when the language is empty.
std::optional<std::vector<int>> shortest_accepted(const Dfa& d);

enum class ProductMode { And, AndNot };
Dfa product(const Dfa& a, const Dfa& b, ProductMode mode);

// Accepts the reversals of d's words.
Nfa reverse_nfa(const Dfa& d);

Dfa relabel_dfa(const Dfa& d, const std::vector<int>& tau);

// Words labeling some path that starts inside `starts`.
Nfa forward_word_nfa(const LabeledGraph& g, const Bitset& starts);

// Words labeling some path that ends inside `ends`.
Nfa ending_word_nfa(const LabeledGraph& g, const Bitset& ends);

Bitset full_vertex_set(const LabeledGraph& g);

// Minimal acceptor of the forward word language from `starts`.
Dfa forward_language_dfa(const LabeledGraph& g, const Bitset& starts);

}  // namespace flipcount

#endif
