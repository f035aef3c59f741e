#include "flipcount/cli.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "flipcount/counting.hpp"
#include "flipcount/errors.hpp"
#include "flipcount/exports.hpp"
#include "flipcount/json_io.hpp"
#include "flipcount/krieger.hpp"
#include "flipcount/oracle.hpp"
#include "flipcount/series.hpp"
#include "flipcount/signed_subsets.hpp"

namespace flipcount {

namespace {

struct CountOpts {
  std::string system;
  long long max_m = 0;
  std::string chain = "joint";
  bool direct = false;
  bool verify = false;
};

struct ZetaOpts {
  std::string system;
  int order = 0;
  bool closed_form = false;
};

struct ExportOpts {
  std::string system;
  std::string what;
  std::string out_path;
};

struct PreparedSystem {
  System sys;
  LabeledGraph graph;    // one-symbol flip presentation (recoded when sliding)
  std::vector<int> tau;
};

PreparedSystem prepare(const std::string& path) {
  PreparedSystem p;
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

JointStateChain select_chain(const KriegerAnalysis& k, const std::string& kind) {
  if (kind == "joint") return k.joint;
  Restriction finitary = build_finitary_chain(k);
  if (kind == "finitary") return finitary.chain;
  return build_irreducible_component(k, finitary).chain;
}

std::string int_str(const Int& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

CountTable direct_count_table(const System& sys, long long max_m) {
  if (sys.kind != "sft") throw SchemaError("--direct requires an sft input");
  const int n = sys.graph.num_vertices();
  IntMatrix a(n);
  for (const LabeledGraph::Edge& e : sys.graph.edges) a.at(e.src, e.dst) = 1;
  std::map<std::string, int> by_name;
  for (int v = 0; v < n; ++v) by_name[sys.graph.vertex_names[static_cast<size_t>(v)]] = v;
  IntMatrix j(n);
  for (int v = 0; v < n; ++v) {
    const std::string& name = sys.graph.vertex_names[static_cast<size_t>(v)];
    int sym = -1;
    for (size_t a = 0; a < sys.graph.alphabet.size(); ++a) {
      if (sys.graph.alphabet[a] == name) sym = static_cast<int>(a);
    }
    if (sym < 0) throw InvariantViolation("sft state has no matching alphabet symbol");
    const std::string& image = sys.graph.alphabet[static_cast<size_t>(sys.flip.tau[static_cast<size_t>(sym)])];
    auto it = by_name.find(image);
    if (it == by_name.end()) throw FlipIncompatible("state involution leaves the essential part");
    j.at(v, it->second) = 1;
  }
  CountTable table;
  for (long long m = 1; m <= max_m; ++m) {
    table.m.push_back(m);
    table.p.push_back(count_thmA(a, j, m));
    table.p0.push_back(count_thmA(a, j, m, 0));
    if (m % 2 == 0) {
      table.p1.emplace_back(count_thmA(a, j, m, 1));
    } else {
      table.p1.emplace_back(std::nullopt);
    }
    table.provenance.push_back("direct");
  }
  return table;
}

int cmd_count(const CountOpts& opt, std::ostream& out) {
  PreparedSystem p = prepare(opt.system);
  CountTable table;
  if (opt.direct) {
    table = direct_count_table(p.sys, opt.max_m);
  } else {
    KriegerAnalysis k = analyze(p.graph, p.tau);
    JointStateChain chain = select_chain(k, opt.chain);
    std::vector<LevelMatrices> levels = build_all_levels(chain);
    table = count_table(levels, opt.max_m);
  }
  out << "m\tp_m\tp_{m,0}\tp_{m,1}";
  if (opt.verify) out << "\toracle_p_m\toracle_p_{m,0}\toracle_p_{m,1}";
  out << "\n";
  bool mismatch = false;
  for (size_t row = 0; row < table.m.size(); ++row) {
    long long m = table.m[row];
    out << m << '\t' << int_str(table.p[row]) << '\t' << int_str(table.p0[row]) << '\t';
    if (table.p1[row].has_value()) {
      out << int_str(*table.p1[row]);
    } else {
      out << '-';
    }
    if (opt.verify) {
      Int q = oracle_periodic(p.sys.graph, static_cast<int>(m));
      Int q0 = oracle_flip_fixed(p.sys.graph, p.sys.flip, static_cast<int>(m), 0);
      out << '\t' << int_str(q) << '\t' << int_str(q0) << '\t';
      if (table.p[row] != q || table.p0[row] != q0) mismatch = true;
      if (m % 2 == 0) {
        Int q1 = oracle_flip_fixed(p.sys.graph, p.sys.flip, static_cast<int>(m), 1);
        out << int_str(q1);
        if (!table.p1[row].has_value() || *table.p1[row] != q1) mismatch = true;
      } else {
        out << '-';
      }
    }
    out << "\n";
  }
  return mismatch ? 4 : 0;
}

int cmd_zeta(const ZetaOpts& opt, std::ostream& out) {
  PreparedSystem p = prepare(opt.system);
  KriegerAnalysis k = analyze(p.graph, p.tau);
  std::vector<LevelMatrices> levels = build_all_levels(k.joint);
  RatFunc zeta = zeta_rational(levels);
  RatFunc g = generating_rational(levels);
  Series series = flip_zeta_series(zeta, g, opt.order);
  if (opt.closed_form) {
    out << "zeta_T\t" << ratfunc_to_string(zeta) << "\n";
    out << "G\t" << ratfunc_to_string(g) << "\n";
  }
  for (int m = 0; m <= opt.order; ++m) {
    out << m << '\t' << rat_to_string(series.at(m)) << "\n";
  }
  return 0;
}

int cmd_export(const ExportOpts& opt) {
  PreparedSystem p = prepare(opt.system);
  KriegerAnalysis k = analyze(p.graph, p.tau);
  std::string content;
  if (opt.what == "matrices") {
    std::vector<LevelMatrices> levels = build_all_levels(k.joint);
    content = matrices_dump(k.joint, levels);
  } else {
    content = chain_dot(select_chain(k, opt.what));
  }
  write_file_atomic(opt.out_path, content);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts flip-fixed periodic points of sofic shifts"};
  app.name("flipcount");
  app.require_subcommand(1);

  CountOpts copt;
  CLI::App* count = app.add_subcommand("count", "Tabulate periodic and flip-fixed point counts");
  count->add_option("--system", copt.system, "System description file")->required();
  count->add_option("--max-m", copt.max_m, "Largest period to tabulate")
      ->required()
      ->check(CLI::PositiveNumber);
  count->add_option("--chain", copt.chain, "Which chain to count on")
      ->check(CLI::IsMember({"joint", "finitary", "component"}))
      ->capture_default_str();
  count->add_flag("--direct", copt.direct, "Count on the input matrix itself (sft only)");
  count->add_flag("--verify", copt.verify, "Append brute-force columns; mismatch fails");

  ZetaOpts zopt;
  CLI::App* zeta = app.add_subcommand("zeta", "Print the flip zeta series");
  zeta->add_option("--system", zopt.system, "System description file")->required();
  zeta->add_option("--order", zopt.order, "Truncation order")
      ->required()
      ->check(CLI::NonNegativeNumber);
  zeta->add_flag("--closed-form", zopt.closed_form, "Also print zeta_T and G as rational functions");

  ExportOpts eopt;
  CLI::App* exp = app.add_subcommand("export", "Write a chain or its level matrices to a file");
  exp->add_option("--system", eopt.system, "System description file")->required();
  exp->add_option("--what", eopt.what, "What to export")
      ->required()
      ->check(CLI::IsMember({"joint", "finitary", "component", "matrices"}));
  exp->add_option("--out", eopt.out_path, "Output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (count->parsed()) return cmd_count(copt, out);
    if (zeta->parsed()) return cmd_zeta(zopt, out);
    return cmd_export(eopt);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadSymbol& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotABlock& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyShift& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotIrreducible& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  } catch (const FlipError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace flipcount
