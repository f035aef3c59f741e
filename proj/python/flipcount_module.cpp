#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flipcount/counting.hpp"
#include "flipcount/errors.hpp"
#include "flipcount/exports.hpp"
#include "flipcount/json_io.hpp"
#include "flipcount/krieger.hpp"
#include "flipcount/oracle.hpp"
#include "flipcount/series.hpp"
#include "flipcount/signed_subsets.hpp"

namespace py = pybind11;

namespace {

using namespace flipcount;

std::string int_str(const Int& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

struct Prepared {
  System sys;
  LabeledGraph graph;
  std::vector<int> tau;
};

Prepared prepare(const std::string& path) {
  Prepared p;
  p.sys = load_system(path);
  if (p.sys.flip.one_block()) {
    flip_axiom_check(p.sys.graph, p.sys.flip);
    p.graph = p.sys.graph;
    p.tau = p.sys.flip.tau;
  } else {
    RecodeResult rr = one_block_recode(p.sys.graph, p.sys.flip);
    p.graph = rr.graph;
    p.tau = rr.flip.tau;
  }
  return p;
}

JointStateChain chain_for(const std::string& path, const std::string& kind) {
  Prepared p = prepare(path);
  KriegerAnalysis k = analyze(p.graph, p.tau);
  if (kind == "joint") return k.joint;
  Restriction finitary = build_finitary_chain(k);
  if (kind == "finitary") return finitary.chain;
  if (kind == "component") return build_irreducible_component(k, finitary).chain;
  throw SchemaError("unknown chain kind: " + kind);
}

// Rows (m, p_m, p_{m,0}, p_{m,1} or None), exact values as decimal strings.
py::list count_rows(const std::string& path, long long max_m, const std::string& kind) {
  JointStateChain chain = chain_for(path, kind);
  CountTable table = count_table(build_all_levels(chain), max_m);
  py::list rows;
  for (size_t i = 0; i < table.m.size(); ++i) {
    py::object p1 = table.p1[i].has_value() ? py::object(py::str(int_str(*table.p1[i])))
                                            : py::object(py::none());
    rows.append(py::make_tuple(table.m[i], int_str(table.p[i]), int_str(table.p0[i]), p1));
  }
  return rows;
}

py::dict zeta_report(const std::string& path, int order) {
  JointStateChain chain = chain_for(path, "joint");
  std::vector<LevelMatrices> levels = build_all_levels(chain);
  RatFunc zeta = zeta_rational(levels);
  RatFunc g = generating_rational(levels);
  Series series = flip_zeta_series(zeta, g, order);
  py::list coeffs;
  for (int m = 0; m <= order; ++m) coeffs.append(rat_to_string(series.at(m)));
  py::dict out;
  out["zeta_T"] = ratfunc_to_string(zeta);
  out["G"] = ratfunc_to_string(g);
  out["series"] = coeffs;
  return out;
}

std::string brute_periodic(const std::string& path, int m) {
  System sys = load_system(path);
  return int_str(oracle_periodic(sys.graph, m));
}

std::string brute_flip_fixed(const std::string& path, int n, int delta) {
  System sys = load_system(path);
  return int_str(oracle_flip_fixed(sys.graph, sys.flip, n, delta));
}

std::string export_dot(const std::string& path, const std::string& kind) {
  return chain_dot(chain_for(path, kind));
}

}  // namespace

PYBIND11_MODULE(_flipcount, m) {
  m.doc() = "Flip-fixed periodic point counting for sofic shifts";
  m.def("count_rows", &count_rows, py::arg("path"), py::arg("max_m"), py::arg("chain") = "joint");
  m.def("zeta_report", &zeta_report, py::arg("path"), py::arg("order"));
  m.def("oracle_periodic", &brute_periodic, py::arg("path"), py::arg("m"));
  m.def("oracle_flip_fixed", &brute_flip_fixed, py::arg("path"), py::arg("n"), py::arg("delta"));
  m.def("chain_dot", &export_dot, py::arg("path"), py::arg("chain") = "joint");
  py::register_exception<SchemaError>(m, "SchemaError");
  py::register_exception<FlipError>(m, "FlipError");
  py::register_exception<NotIrreducible>(m, "NotIrreducibleError");
}
