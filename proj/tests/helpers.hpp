#ifndef FLIPCOUNT_TESTS_HELPERS_HPP
#define FLIPCOUNT_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "flipcount/labeled_graph.hpp"
#include "flipcount/oracle.hpp"

namespace flipcount::testing {

inline LabeledGraph even_graph() { return corpus_system("even").graph; }
inline LabeledGraph golden_graph() { return corpus_system("golden").graph; }
inline LabeledGraph full2_graph() { return corpus_system("full2swap").graph; }
inline LabeledGraph full1_graph() { return corpus_system("full1").graph; }

inline std::vector<int> word(std::initializer_list<int> symbols) { return std::vector<int>(symbols); }

#ifdef FLIPCOUNT_DATA_DIR
inline std::string data_file(const std::string& name) {
  return std::string(FLIPCOUNT_DATA_DIR) + "/" + name;
}
#endif

}  // namespace flipcount::testing

#endif
