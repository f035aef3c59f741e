#ifndef FLIPCOUNT_CHARPOLY_HPP
#define FLIPCOUNT_CHARPOLY_HPP

#include <vector>

#include "flipcount/matrix.hpp"

namespace flipcount {

// Coefficients of det(t*I - M), ascending in t, monic of degree size().
// Computed modulo enough word-sized primes to cover a proven coefficient
// bound, then recombined exactly.
std::vector<Int> charpoly(const IntMatrix& m);

// Coefficients of det(I - t*M), ascending in t.  Trailing zeros trimmed;
// the constant coefficient is always 1.
std::vector<Int> det_identity_minus_t(const IntMatrix& m);

// Slow exact computation over rationals, usable as an independent check on
// small matrices.
std::vector<Int> charpoly_reference(const IntMatrix& m);

}  // namespace flipcount

#endif
