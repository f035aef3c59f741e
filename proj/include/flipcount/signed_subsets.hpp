#ifndef FLIPCOUNT_SIGNED_SUBSETS_HPP
#define FLIPCOUNT_SIGNED_SUBSETS_HPP

#include <utility>
#include <vector>

#include "flipcount/krieger.hpp"
#include "flipcount/matrix.hpp"

namespace flipcount {

// All k-element state subsets that read a single symbol, ordered
// lexicographically by their sorted state id tuples.
struct SubsetAlphabet {
  int level = 0;
  std::vector<std::vector<int>> members;

  int size() const { return static_cast<int>(members.size()); }
};

// Level-k matrices over the subset alphabet.  A sums injection signs, B
// flags whether any compatible injection exists, J carries the involution
// with its permutation sign.
struct LevelMatrices {
  int level = 0;
  SubsetAlphabet alphabet;
  IntMatrix A;
  IntMatrix B;
  IntMatrix J;
};

SubsetAlphabet subset_alphabet(const JointStateChain& chain, int k);

// Sum of inversion-parity signs over one-to-one maps f with A(s, f(s)) = 1,
// paired with a flag for whether any such map exists.
std::pair<Int, int> injection_sign_sum(const JointStateChain& chain,
                                       const std::vector<int>& s1,
                                       const std::vector<int>& s2);

// Throws IncompleteLevels when level k has no subsets.
LevelMatrices build_level_matrices(const JointStateChain& chain, int k);

// Largest k with a nonempty subset alphabet: the maximum label fiber size.
int max_level(const JointStateChain& chain);

// Levels 1..max_level(chain) in order.
std::vector<LevelMatrices> build_all_levels(const JointStateChain& chain);

}  // namespace flipcount

#endif
