#ifndef FLIPCOUNT_PRESENTATIONS_HPP
#define FLIPCOUNT_PRESENTATIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flipcount/dfa.hpp"
#include "flipcount/labeled_graph.hpp"

namespace flipcount {

// Minimal complete acceptor of the block language of an essential graph.
// Every non-dead state accepts; the dead state absorbs and is always present.
struct FactorDfa {
  Dfa dfa;
  int dead = -1;

  int num_states() const { return dfa.num_states(); }
  int initial() const { return dfa.initial; }
  int step(int s, int a) const { return dfa.next[s][a]; }
  bool live(int s) const { return s != dead; }
  bool accepts(const std::vector<int>& w) const { return dfa.accepts(w); }
};

FactorDfa factor_dfa(const LabeledGraph& g);

// All blocks of exactly the given length, in lexicographic symbol order.
std::vector<std::vector<int>> blocks_of_length(const FactorDfa& f, int len);

// Whether the bi-infinite repetition of w lies in the presented shift.
// Throws BadSymbol on out-of-range symbols, SchemaError on the empty word.
bool periodic_word_test(const LabeledGraph& g, const std::vector<int>& w);

// Whether the block language is carried onto itself by reversal composed
// with the symbol involution tau.  A failing witness block is returned
// through `witness` when non-null.
bool reversal_flip_check(const LabeledGraph& g, const std::vector<int>& tau,
                         std::vector<int>* witness = nullptr);

// A flip candidate.  radius == 0 with a tau table is the one-symbol form.
// Otherwise `window` maps every (2*radius+1)-block of the shift to a symbol
// and the induced candidate sends x to the sequence whose i-th entry is the
// window value read at the block of x centered at -i.
struct FlipSpec {
  int radius = 0;
  std::vector<int> tau;
  std::map<std::vector<int>, int> window;

  bool one_block() const { return radius == 0 && window.empty(); }
};

// Validates the flip axioms against the presentation.  Throws NotInvolution
// or NotReversing with a witness; returns normally when the candidate is a
// genuine flip of the presented shift.
void flip_axiom_check(const LabeledGraph& g, const FlipSpec& flip);

// Result of recoding a sliding-block flip to a one-symbol flip.  Symbols of
// the new graph are pairs (old symbol, image symbol); `projection` sends a
// new symbol to its first component and realizes the factor map back onto
// the original shift.
struct RecodeResult {
  LabeledGraph graph;
  FlipSpec flip;                                // one-symbol form
  std::vector<std::pair<int, int>> symbol_pairs;
  std::vector<int> projection;
};

RecodeResult one_block_recode(const LabeledGraph& g, const FlipSpec& flip);

std::string word_to_string(const LabeledGraph& g, const std::vector<int>& w);

}  // namespace flipcount

#endif
