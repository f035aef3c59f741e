#ifndef FLIPCOUNT_JSON_IO_HPP
#define FLIPCOUNT_JSON_IO_HPP

#include <string>
#include <vector>

#include "flipcount/labeled_graph.hpp"
#include "flipcount/presentations.hpp"

namespace flipcount {

// A system as described by an input file: a labeled graph presentation plus
// a flip candidate.  "sft" inputs are stored as the vertex shift whose labels
// are the source state ids.
struct System {
  std::string name;
  std::string kind;  // "sofic" or "sft"
  LabeledGraph graph;
  FlipSpec flip;
};

// Parses and validates a system document.  The graph is trimmed to its
// essential part.  Throws SchemaError on malformed input.
System parse_system_json(const std::string& text);
System load_system(const std::string& path);

// Splits a block key: concatenated characters when every alphabet symbol is
// a single character, comma-separated symbols otherwise.
std::vector<int> parse_block_key(const LabeledGraph& g, const std::string& key);

}  // namespace flipcount

#endif
