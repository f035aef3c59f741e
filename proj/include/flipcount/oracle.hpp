#ifndef FLIPCOUNT_ORACLE_HPP
#define FLIPCOUNT_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flipcount/krieger.hpp"
#include "flipcount/labeled_graph.hpp"
#include "flipcount/matrix.hpp"
#include "flipcount/presentations.hpp"

namespace flipcount {

// Small built-in systems used throughout the test suite and docs.
struct CorpusSystem {
  std::string name;
  LabeledGraph graph;
  FlipSpec flip;
};

std::vector<std::string> corpus_names();
CorpusSystem corpus_system(const std::string& name);

// Number of points fixed by the m-th power of the shift, counted by direct
// enumeration of length-m words whose periodic extension stays in the shift.
Int oracle_periodic(const LabeledGraph& g, int m);
std::vector<std::vector<int>> oracle_periodic_words(const LabeledGraph& g, int m);

// Number of points x with sigma^N(x) = x and sigma^delta(flip(x)) = x,
// enumerated as length-N words w with w^inf in the shift and
// w_i = f(window of w^inf at -i-delta) for all i.
Int oracle_flip_fixed(const LabeledGraph& g, const FlipSpec& flip, int n, int delta);
std::vector<std::vector<int>> oracle_flip_fixed_words(const LabeledGraph& g, const FlipSpec& flip, int n,
                                                      int delta);

// The same counts on a joint state chain, enumerated over closed edge paths.
// The flip condition reads y_i = star(y_{-i-delta mod N}).
Int chain_periodic_count(const JointStateChain& chain, int n);
Int chain_flip_fixed_count(const JointStateChain& chain, int n, int delta);

// Restriction of chain_flip_fixed_count to the fiber of the periodic point
// w^inf: every y_i must carry the symbol w_{i mod |w|}.
Int chain_flip_fixed_in_fiber(const JointStateChain& chain, int n, int delta, const std::vector<int>& word);

// Counts the distinct forward languages of stabilized vertex sets reached by
// eventually periodic left rays ...ccc u with |c| <= max_cycle, |u| <= max_tail.
int sample_ray_class_count(const LabeledGraph& g, int max_cycle, int max_tail);

// Sign of a permutation restricted to an invariant subset (bit i = element i).
int permutation_sign_on(const std::vector<int>& perm, std::uint64_t subset);

// Sum of (-1)^(|E|+1) sgn(perm|_E) over the nonempty sets of the family.
Int invariant_family_signed_sum(const std::vector<int>& perm, const std::vector<std::uint64_t>& family);

// Randomized check of the signed inclusion-exclusion identity: families built
// from orbit unions closed under union and difference always sum to one.
bool lemma_2_3_check(int trials, int max_size, std::uint64_t seed);

}  // namespace flipcount

#endif
