#ifndef FLIPCOUNT_COUNTING_HPP
#define FLIPCOUNT_COUNTING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipcount/matrix.hpp"
#include "flipcount/signed_subsets.hpp"

namespace flipcount {

// Orbit counts up to horizon M: p[m-1] counts period-m points, p0/p1 count
// the two flip alignments; p1 is only defined for even m.
struct CountTable {
  std::vector<long long> m;
  std::vector<Int> p;
  std::vector<Int> p0;
  std::vector<std::optional<Int>> p1;
  std::vector<std::string> provenance;
};

// Collapses the flip alignment index: only the parity of n matters, and for
// odd m every alignment gives the same count.
std::pair<long long, long long> reduce_index(long long m, long long n);

IntMatrix matrix_diag(const IntMatrix& m);
Int entry_sum(const IntMatrix& m);

// Throws FlipIncompatible unless J*J = I and J*A = A^T*J.
void require_flip_pair(const IntMatrix& a, const IntMatrix& j);

// Direct evaluation on a single matrix pair.
Int count_thmA(const IntMatrix& a, const IntMatrix& j, long long m);
Int count_thmA(const IntMatrix& a, const IntMatrix& j, long long m,
               long long n);

// Alternating sum over subset levels.
Int count_thmB(const std::vector<LevelMatrices>& levels, long long m);
Int count_thmB(const std::vector<LevelMatrices>& levels, long long m,
               long long n);

CountTable count_table(const std::vector<LevelMatrices>& levels,
                       long long max_m);

// Traces of powers m = 1..max_m, recovered from det(I - tA) by the
// logarithmic derivative recurrence.
std::vector<Int> power_traces(const IntMatrix& a, long long max_m);

}  // namespace flipcount

#endif
