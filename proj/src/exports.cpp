#include "flipcount/exports.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flipcount/errors.hpp"

namespace flipcount {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_matrix(std::ostringstream& out, const std::string& name, const IntMatrix& m) {
  out << "matrix " << name << "\n";
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << m.at(i, j);
    }
    out << "\n";
  }
}

}  // namespace

std::string chain_dot(const JointStateChain& chain) {
  std::ostringstream out;
  out << "digraph chain {\n";
  out << "  rankdir=LR;\n";
  const int n = chain.num_states();
  for (int i = 0; i < n; ++i) {
    out << "  " << quote(chain.state_name(i));
    if (chain.star[static_cast<size_t>(i)] == i) out << " [peripheries=2]";
    out << ";\n";
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (chain.A.at(s, t) == 0) continue;
      const std::string& label = chain.alphabet[static_cast<size_t>(chain.states[static_cast<size_t>(s)].symbol)];
      out << "  " << quote(chain.state_name(s)) << " -> " << quote(chain.state_name(t)) << " [label="
          << quote(label) << "];\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    int j = chain.star[static_cast<size_t>(i)];
    if (i < j) {
      out << "  " << quote(chain.state_name(i)) << " -> " << quote(chain.state_name(j))
          << " [style=dashed, dir=none, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string matrices_dump(const JointStateChain& chain, const std::vector<LevelMatrices>& levels) {
  std::ostringstream out;
  out << "chain states " << chain.num_states() << "\n";
  for (int i = 0; i < chain.num_states(); ++i) out << chain.state_name(i) << "\n";
  out << "levels " << levels.size() << "\n";
  for (const LevelMatrices& lm : levels) {
    out << "level " << lm.level << "\n";
    out << "size " << lm.alphabet.size() << "\n";
    out << "subsets\n";
    for (const std::vector<int>& members : lm.alphabet.members) {
      for (size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out << ',';
        out << members[i];
      }
      out << "\n";
    }
    write_matrix(out, "A", lm.A);
    write_matrix(out, "B", lm.B);
    write_matrix(out, "J", lm.J);
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open for writing: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("failed writing: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("failed to move output into place: " + target.string());
  }
}

}  // namespace flipcount
