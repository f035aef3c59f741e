#ifndef FLIPCOUNT_EXPORTS_HPP
#define FLIPCOUNT_EXPORTS_HPP

#include <string>
#include <vector>

#include "flipcount/krieger.hpp"
#include "flipcount/signed_subsets.hpp"

namespace flipcount {

// Graphviz rendering of a chain: one node per state in state order, solid
// labeled transition edges, dashed undirected pairing edges between states
// swapped by star, double borders on star-fixed states.
std::string chain_dot(const JointStateChain& chain);

// Plain-text dump of all level matrices, preceded by the chain's state list
// so subset members are interpretable.  Deterministic byte output.
std::string matrices_dump(const JointStateChain& chain, const std::vector<LevelMatrices>& levels);

// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace flipcount

#endif
