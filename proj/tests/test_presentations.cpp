#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "flipcount/errors.hpp"
#include "flipcount/oracle.hpp"
#include "flipcount/presentations.hpp"

#include "helpers.hpp"

using namespace flipcount;
using flipcount::testing::even_graph;
using flipcount::testing::full2_graph;
using flipcount::testing::golden_graph;
using flipcount::testing::word;

namespace {

// Right-resolving presentation of the language a^i b^j: not reversal closed.
LabeledGraph one_way_graph() {
  LabeledGraph g;
  g.alphabet = {"a", "b"};
  g.vertex_names = {"u", "w"};
  g.edges = {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}};
  g.validate();
  return g;
}

std::vector<std::vector<int>> all_words(int alphabet, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(m, 0);
  while (true) {
    out.push_back(w);
    int i = m - 1;
    while (i >= 0 && w[i] == alphabet - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace

TEST_CASE("factor automaton accepts exactly the readable words") {
  FactorDfa fac = factor_dfa(even_graph());
  CHECK(fac.accepts(word({})));
  CHECK(fac.accepts(word({0, 0})));
  CHECK(fac.accepts(word({0, 1, 0})));
  CHECK(fac.accepts(word({0, 1, 1, 0})));
  CHECK_FALSE(fac.accepts(word({1, 0, 1})));
  CHECK_FALSE(fac.accepts(word({0, 1, 0, 1})));
}

TEST_CASE("block enumeration matches brute force filtering") {
  for (const char* name : {"even", "golden"}) {
    LabeledGraph g = corpus_system(name).graph;
    FactorDfa fac = factor_dfa(g);
    int alphabet = static_cast<int>(g.alphabet.size());
    for (int m = 1; m <= 6; ++m) {
      std::set<std::vector<int>> expected;
      for (const auto& w : all_words(alphabet, m)) {
        if (fac.accepts(w)) expected.insert(w);
      }
      auto got = blocks_of_length(fac, m);
      std::set<std::vector<int>> got_set(got.begin(), got.end());
      CHECK(got_set == expected);
      CHECK(got.size() == expected.size());
    }
  }
  CHECK(blocks_of_length(factor_dfa(even_graph()), 3).size() == 7);
}

TEST_CASE("periodic words are recognized by cycle closure") {
  LabeledGraph g = even_graph();
  CHECK(periodic_word_test(g, word({0})));
  CHECK_FALSE(periodic_word_test(g, word({1, 0})));
  CHECK(periodic_word_test(g, word({1, 0, 0})));
  CHECK(periodic_word_test(g, word({1})));
  CHECK_FALSE(periodic_word_test(g, word({1, 1, 0})));
}

TEST_CASE("reversal closure check distinguishes flip candidates") {
  CHECK(reversal_flip_check(even_graph(), {0, 1}, nullptr));
  CHECK(reversal_flip_check(golden_graph(), {0, 1}, nullptr));
  std::vector<int> witness;
  CHECK_FALSE(reversal_flip_check(one_way_graph(), {0, 1}, &witness));
  // The witness lies on exactly one side: either it is a block whose flipped
  // reversal is not, or the other way around.
  REQUIRE_FALSE(witness.empty());
  FactorDfa fac = factor_dfa(one_way_graph());
  std::vector<int> flipped(witness.rbegin(), witness.rend());
  CHECK(fac.accepts(witness) != fac.accepts(flipped));
}

TEST_CASE("flip axioms are enforced at validation") {
  FlipSpec ok;
  ok.tau = {0, 1};
  CHECK_NOTHROW(flip_axiom_check(even_graph(), ok));

  FlipSpec not_reversing;
  not_reversing.tau = {0, 1};
  CHECK_THROWS_AS(flip_axiom_check(one_way_graph(), not_reversing),
                  NotReversing);

  // xor of the two neighbors is not an involution on the full 2-shift.
  FlipSpec bad;
  bad.radius = 1;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) bad.window[{a, b, c}] = a ^ c;
  CHECK_THROWS_AS(flip_axiom_check(full2_graph(), bad), NotInvolution);
}

TEST_CASE("window flips recode to one-block flips with equal counts") {
  // Center projection window of radius 1 equals the identity one-block flip.
  LabeledGraph g = golden_graph();
  FlipSpec center;
  center.radius = 1;
  for (const auto& w : blocks_of_length(factor_dfa(g), 3)) center.window[w] = w[1];
  flip_axiom_check(g, center);

  RecodeResult rec = one_block_recode(g, center);
  CHECK(rec.flip.one_block());
  flip_axiom_check(rec.graph, rec.flip);

  FlipSpec identity;
  identity.tau = {0, 1};
  for (int n = 1; n <= 6; ++n) {
    CHECK(oracle_periodic(rec.graph, n) == oracle_periodic(g, n));
    for (int delta = 0; delta <= 1; ++delta) {
      CHECK(oracle_flip_fixed(rec.graph, rec.flip, n, delta) ==
            oracle_flip_fixed(g, identity, n, delta));
    }
  }
}

TEST_CASE("left projection window shifts the mirror axis") {
  LabeledGraph g = full2_graph();
  FlipSpec left;
  left.radius = 1;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) left.window[{a, b, c}] = a;
  flip_axiom_check(g, left);

  FlipSpec identity;
  identity.tau = {0, 1};
  for (int n = 1; n <= 6; ++n) {
    for (int delta = 0; delta <= 1; ++delta) {
      CHECK(oracle_flip_fixed(g, left, n, delta) ==
            oracle_flip_fixed(g, identity, n, delta + 1));
    }
  }

  RecodeResult rec = one_block_recode(g, left);
  flip_axiom_check(rec.graph, rec.flip);
  for (int n = 1; n <= 6; ++n) {
    CHECK(oracle_periodic(rec.graph, n) == oracle_periodic(g, n));
    for (int delta = 0; delta <= 1; ++delta) {
      CHECK(oracle_flip_fixed(rec.graph, rec.flip, n, delta) ==
            oracle_flip_fixed(g, left, n, delta));
    }
  }
}

TEST_CASE("word rendering joins symbol names") {
  LabeledGraph g = even_graph();
  CHECK(word_to_string(g, word({0, 1, 0})) == "010");
  LabeledGraph wide;
  wide.alphabet = {"aa", "bb"};
  wide.vertex_names = {"v"};
  wide.edges = {{0, 0, 0}, {0, 1, 0}};
  wide.validate();
  CHECK(word_to_string(wide, word({0, 1})) == "aa,bb");
}

namespace {

// Direct path search over the labeled graph, with no automaton involved.
bool path_reads(const LabeledGraph& g, const std::vector<int>& w) {
  std::set<int> current;
  for (int v = 0; v < static_cast<int>(g.vertex_names.size()); ++v) {
    current.insert(v);
  }
  for (int symbol : w) {
    std::set<int> next;
    for (const auto& e : g.edges) {
      if (e.sym == symbol && current.count(e.src)) next.insert(e.dst);
    }
    if (next.empty()) return false;
    current = std::move(next);
  }
  return true;
}

}  // namespace

TEST_CASE("factor automaton agrees with path search on every short word") {
  for (const char* name : {"even", "golden", "full2swap", "full1"}) {
    CAPTURE(name);
    LabeledGraph g = corpus_system(name).graph;
    FactorDfa fac = factor_dfa(g);
    int alphabet = static_cast<int>(g.alphabet.size());
    for (int m = 1; m <= 8; ++m) {
      for (const auto& w : all_words(alphabet, m)) {
        CHECK(fac.accepts(w) == path_reads(g, w));
      }
    }
  }
}

TEST_CASE("periodicity matches acceptance of the saturated power") {
  for (const char* name : {"even", "golden", "full2swap", "full1"}) {
    CAPTURE(name);
    LabeledGraph g = corpus_system(name).graph;
    FactorDfa fac = factor_dfa(g);
    int alphabet = static_cast<int>(g.alphabet.size());
    int reps = 1 << g.vertex_names.size();
    for (int m = 1; m <= 6; ++m) {
      for (const auto& w : all_words(alphabet, m)) {
        std::vector<int> power;
        for (int i = 0; i < reps; ++i) power.insert(power.end(), w.begin(), w.end());
        CHECK(periodic_word_test(g, w) == fac.accepts(power));
      }
    }
  }
}

TEST_CASE("one block flip validation mirrors the reversal closure check") {
  struct Pair {
    LabeledGraph graph;
    std::vector<int> tau;
  };
  std::vector<Pair> pairs = {
      {even_graph(), {0, 1}},      {even_graph(), {1, 0}},
      {golden_graph(), {0, 1}},    {golden_graph(), {1, 0}},
      {one_way_graph(), {0, 1}},   {full2_graph(), {1, 0}},
      {corpus_system("full1").graph, {0}},
  };
  for (const auto& [g, tau] : pairs) {
    FlipSpec spec;
    spec.tau = tau;
    if (reversal_flip_check(g, tau, nullptr)) {
      CHECK_NOTHROW(flip_axiom_check(g, spec));
    } else {
      CHECK_THROWS_AS(flip_axiom_check(g, spec), NotReversing);
    }
  }
}
