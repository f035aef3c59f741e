#include "doctest.h"

#include <vector>

#include "flipcount/bitset.hpp"
#include "flipcount/dfa.hpp"
#include "flipcount/labeled_graph.hpp"

#include "helpers.hpp"

using namespace flipcount;
using flipcount::testing::even_graph;
using flipcount::testing::word;

TEST_CASE("bitset ordering follows sorted position tuples") {
  Bitset a(4), b(4), c(4);
  a.set(0);
  b.set(0);
  b.set(1);
  c.set(1);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a < c);
  CHECK(a.bits() == std::vector<int>{0});
  CHECK(b.count() == 2);
  CHECK(c.first() == 1);
  CHECK(c.next(1) == -1);
}

TEST_CASE("boolean relation composition and idempotents") {
  LabeledGraph g = even_graph();
  BoolRel m0 = g.relation(0);  // swaps the two vertices
  BoolRel m1 = g.relation(1);  // keeps only the first
  CHECK_FALSE(m0.is_idempotent());
  CHECK(m0.compose(m0).is_idempotent());
  CHECK(m1.is_idempotent());
  CHECK(m0.compose(m0) == BoolRel::identity(2));
  Bitset all(2);
  all.set(0);
  all.set(1);
  CHECK(m1.image(all).bits() == std::vector<int>{0});
  CHECK(m0.image(all).count() == 2);
  CHECK(m1.transpose().at(0, 0));
  CHECK_FALSE(m1.transpose().at(0, 1));
}

TEST_CASE("even shift block language acceptance") {
  LabeledGraph g = even_graph();
  Dfa lang = forward_language_dfa(g, full_vertex_set(g));
  CHECK(lang.accepts(word({})));
  CHECK(lang.accepts(word({0, 0})));
  CHECK(lang.accepts(word({0, 1, 0})));
  CHECK(lang.accepts(word({0, 1, 1, 0})));
  CHECK(lang.accepts(word({1, 0, 0, 1})));
  CHECK_FALSE(lang.accepts(word({1, 0, 1})));
  CHECK_FALSE(lang.accepts(word({1, 0, 0, 0, 1})));
}

TEST_CASE("minimization and canonical keys identify equal languages") {
  LabeledGraph g = even_graph();
  Dfa a = forward_language_dfa(g, full_vertex_set(g));
  // The same language built from a redundant NFA start set.
  Nfa nfa = forward_word_nfa(g, full_vertex_set(g));
  Dfa b = minimize_dfa(determinize(nfa));
  CHECK(same_language(a, b));
  CHECK(canonical_key(a) == canonical_key(b));

  Bitset only_q(2);
  only_q.set(1);
  Dfa c = forward_language_dfa(g, only_q);
  CHECK_FALSE(same_language(a, c));
  CHECK(canonical_key(a) != canonical_key(c));
}

TEST_CASE("product automata compute intersections and differences") {
  LabeledGraph g = even_graph();
  Bitset only_p(2), only_q(2);
  only_p.set(0);
  only_q.set(1);
  Dfa from_p = forward_language_dfa(g, only_p);
  Dfa from_q = forward_language_dfa(g, only_q);

  Dfa meet = product(from_p, from_q, ProductMode::And);
  CHECK(meet.accepts(word({0, 0})));       // readable from both vertices
  CHECK_FALSE(meet.accepts(word({1})));    // only from p
  CHECK_FALSE(meet.accepts(word({0, 1}))); // only from q

  Dfa diff = product(from_p, from_q, ProductMode::AndNot);
  CHECK(diff.accepts(word({1})));
  CHECK_FALSE(diff.accepts(word({0, 0})));

  Dfa empty = product(from_p, from_p, ProductMode::AndNot);
  CHECK(language_empty(empty));
  CHECK_FALSE(shortest_accepted(empty).has_value());
}

TEST_CASE("shortest accepted word is found breadth first") {
  LabeledGraph g = even_graph();
  Bitset only_q(2);
  only_q.set(1);
  Dfa from_q = forward_language_dfa(g, only_q);
  Dfa from_all = forward_language_dfa(g, full_vertex_set(g));
  // Words readable somewhere but not from q; the shortest is "1".
  Dfa gap = product(from_all, from_q, ProductMode::AndNot);
  auto shortest = shortest_accepted(gap);
  REQUIRE(shortest.has_value());
  CHECK(*shortest == word({1}));
}

TEST_CASE("reversal automaton accepts reversed words") {
  LabeledGraph g = even_graph();
  Bitset only_p(2);
  only_p.set(0);
  Dfa from_p = forward_language_dfa(g, only_p);
  Dfa reversed = minimize_dfa(determinize(reverse_nfa(from_p)));
  CHECK(from_p.accepts(word({1, 0})));
  CHECK(reversed.accepts(word({0, 1})));
  // "10" reads from p but its reversal does not, so the languages differ.
  CHECK_FALSE(from_p.accepts(word({0, 1})));
  CHECK_FALSE(same_language(from_p, reversed));
  Dfa twice = minimize_dfa(determinize(reverse_nfa(reversed)));
  CHECK(same_language(from_p, twice));
}

TEST_CASE("relabeling rewrites symbols through an involution") {
  LabeledGraph g = even_graph();
  Dfa lang = forward_language_dfa(g, full_vertex_set(g));
  Dfa swapped = relabel_dfa(lang, {1, 0});
  CHECK(swapped.accepts(word({1, 1})));       // image of "00"
  CHECK_FALSE(swapped.accepts(word({0, 1, 0})));  // image of "101"
  Dfa back = relabel_dfa(swapped, {1, 0});
  CHECK(same_language(lang, back));
}
