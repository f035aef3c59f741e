#include "flipcount/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "flipcount/errors.hpp"

namespace flipcount {

namespace {

using nlohmann::json;

const json& require_key(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + " is missing required key \"" + key + "\"");
  return *it;
}

std::string require_string(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) {
    std::ostringstream out;
    out << j.get<long long>();
    return out.str();
  }
  throw SchemaError(where + " must be a string");
}

std::vector<std::string> require_name_array(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + " must be a nonempty array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(require_string(item, where + " entry"));
  return out;
}

std::map<std::string, int> index_of(const std::vector<std::string>& names, const std::string& where) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], static_cast<int>(i)).second) {
      throw SchemaError(where + " contains a duplicate: \"" + names[i] + "\"");
    }
  }
  return idx;
}

int lookup(const std::map<std::string, int>& idx, const std::string& name, const std::string& where) {
  auto it = idx.find(name);
  if (it == idx.end()) throw SchemaError(where + " references unknown id \"" + name + "\"");
  return it->second;
}

LabeledGraph parse_sofic_graph(const json& doc) {
  LabeledGraph g;
  g.alphabet = require_name_array(require_key(doc, "alphabet", "document"), "\"alphabet\"");
  const json& graph = require_key(doc, "graph", "document");
  if (!graph.is_object()) throw SchemaError("\"graph\" must be an object");
  g.vertex_names = require_name_array(require_key(graph, "vertices", "\"graph\""), "\"vertices\"");
  auto vidx = index_of(g.vertex_names, "\"vertices\"");
  auto sidx = index_of(g.alphabet, "\"alphabet\"");
  const json& edges = require_key(graph, "edges", "\"graph\"");
  if (!edges.is_array()) throw SchemaError("\"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) {
      throw SchemaError("every edge must be a [from, label, to] triple");
    }
    LabeledGraph::Edge edge;
    edge.src = lookup(vidx, require_string(e[0], "edge source"), "edge source");
    edge.sym = lookup(sidx, require_string(e[1], "edge label"), "edge label");
    edge.dst = lookup(vidx, require_string(e[2], "edge target"), "edge target");
    g.edges.push_back(edge);
  }
  return g;
}

LabeledGraph parse_sft_graph(const json& doc) {
  // States and matrix may sit at top level or inside "graph".
  const json* holder = &doc;
  auto graph_it = doc.find("graph");
  if (graph_it != doc.end() && graph_it->is_object() && graph_it->contains("matrix")) {
    holder = &*graph_it;
  }
  LabeledGraph g;
  g.vertex_names = require_name_array(require_key(*holder, "states", "document"), "\"states\"");
  g.alphabet = g.vertex_names;
  if (doc.contains("alphabet")) {
    auto alpha = require_name_array(doc["alphabet"], "\"alphabet\"");
    if (alpha != g.vertex_names) {
      throw SchemaError("an sft alphabet, when given, must equal the state list");
    }
  }
  index_of(g.vertex_names, "\"states\"");
  const json& matrix = require_key(*holder, "matrix", "document");
  const int n = static_cast<int>(g.vertex_names.size());
  if (!matrix.is_array() || static_cast<int>(matrix.size()) != n) {
    throw SchemaError("\"matrix\" must have one row per state");
  }
  for (int i = 0; i < n; ++i) {
    const json& row = matrix[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw SchemaError("\"matrix\" rows must have one entry per state");
    }
    for (int j = 0; j < n; ++j) {
      const json& cell = row[static_cast<size_t>(j)];
      if (!cell.is_number_integer()) throw SchemaError("\"matrix\" entries must be integers");
      long long v = cell.get<long long>();
      if (v != 0 && v != 1) throw SchemaError("\"matrix\" entries must be 0 or 1");
      if (v == 1) g.edges.push_back({i, i, j});
    }
  }
  return g;
}

FlipSpec parse_flip(const json& doc, const LabeledGraph& g) {
  const json& flip = require_key(doc, "flip", "document");
  if (!flip.is_object()) throw SchemaError("\"flip\" must be an object");
  auto sidx = index_of(g.alphabet, "\"alphabet\"");
  FlipSpec spec;
  if (flip.contains("tau")) {
    const json& tau = flip["tau"];
    if (!tau.is_object()) throw SchemaError("\"tau\" must be an object");
    spec.tau.assign(g.alphabet.size(), -1);
    for (auto it = tau.begin(); it != tau.end(); ++it) {
      int from = lookup(sidx, it.key(), "\"tau\" key");
      int to = lookup(sidx, require_string(it.value(), "\"tau\" value"), "\"tau\" value");
      spec.tau[static_cast<size_t>(from)] = to;
    }
    for (size_t a = 0; a < spec.tau.size(); ++a) {
      if (spec.tau[a] < 0) {
        throw SchemaError("\"tau\" must map every alphabet symbol; missing \"" + g.alphabet[a] + "\"");
      }
    }
    return spec;
  }
  if (flip.contains("window")) {
    const json& window = flip["window"];
    if (!window.is_object()) throw SchemaError("\"window\" must be an object");
    const json& radius = require_key(window, "radius", "\"window\"");
    if (!radius.is_number_integer() || radius.get<long long>() < 0) {
      throw SchemaError("\"radius\" must be a non-negative integer");
    }
    spec.radius = static_cast<int>(radius.get<long long>());
    const json& table = require_key(window, "table", "\"window\"");
    if (!table.is_object() || table.empty()) throw SchemaError("\"table\" must be a nonempty object");
    for (auto it = table.begin(); it != table.end(); ++it) {
      std::vector<int> block = parse_block_key(g, it.key());
      if (static_cast<int>(block.size()) != 2 * spec.radius + 1) {
        throw SchemaError("window table key \"" + it.key() + "\" has the wrong length");
      }
      int value = lookup(sidx, require_string(it.value(), "window table value"), "window table value");
      spec.window[block] = value;
    }
    return spec;
  }
  throw SchemaError("\"flip\" must contain either \"tau\" or \"window\"");
}

}  // namespace

std::vector<int> parse_block_key(const LabeledGraph& g, const std::string& key) {
  auto sidx = index_of(g.alphabet, "\"alphabet\"");
  bool single = true;
  for (const std::string& s : g.alphabet) {
    if (s.size() != 1) single = false;
  }
  std::vector<int> out;
  if (single) {
    for (char c : key) {
      out.push_back(lookup(sidx, std::string(1, c), "block key symbol"));
    }
    return out;
  }
  std::string token;
  std::istringstream in(key);
  while (std::getline(in, token, ',')) {
    out.push_back(lookup(sidx, token, "block key symbol"));
  }
  return out;
}

System parse_system_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  System sys;
  sys.name = doc.contains("name") ? require_string(doc["name"], "\"name\"") : "system";
  sys.kind = require_string(require_key(doc, "kind", "document"), "\"kind\"");
  if (sys.kind == "sofic") {
    sys.graph = parse_sofic_graph(doc);
  } else if (sys.kind == "sft") {
    sys.graph = parse_sft_graph(doc);
  } else {
    throw SchemaError("\"kind\" must be \"sofic\" or \"sft\"");
  }
  sys.graph.validate();
  sys.graph = trim_essential(sys.graph);
  sys.flip = parse_flip(doc, sys.graph);
  return sys;
}

System load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_json(buf.str());
}

}  // namespace flipcount
