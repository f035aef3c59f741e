// Acceptance suite: one line per criterion, exit code counts failures.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flipcount/cli.hpp"
#include "flipcount/counting.hpp"
#include "flipcount/krieger.hpp"
#include "flipcount/matrix.hpp"
#include "flipcount/oracle.hpp"
#include "flipcount/series.hpp"
#include "flipcount/signed_subsets.hpp"

#include "helpers.hpp"

using namespace flipcount;
using flipcount::testing::data_file;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok) {
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL")
            << " - " << what << "\n";
  if (!ok) ++failures;
}

bool run_criterion(const std::function<bool()>& body, std::string* note) {
  try {
    return body();
  } catch (const std::exception& e) {
    *note = e.what();
    return false;
  }
}

Poly ipoly(const std::vector<int>& v) {
  std::vector<Int> big(v.begin(), v.end());
  return poly_from_ints(big);
}

std::vector<LevelMatrices> levels_of(const std::string& name) {
  CorpusSystem sys = corpus_system(name);
  KriegerAnalysis k = analyze(sys.graph, sys.flip.tau);
  return build_all_levels(k.joint);
}

bool check_chain_shape(const JointStateChain& chain) {
  int n = chain.num_states();
  if (chain.J.mul(chain.J) != IntMatrix::identity(n)) return false;
  if (chain.J.mul(chain.A) != chain.A.transpose().mul(chain.J)) return false;
  if (!diamond_free(chain)) return false;
  for (int i = 0; i < n; ++i) {
    if (chain.star[chain.star[i]] != i) return false;
  }
  for (const LevelMatrices& lv : build_all_levels(chain)) {
    int s = lv.alphabet.size();
    if (lv.J.mul(lv.J) != IntMatrix::identity(s)) return false;
    if (lv.J.mul(lv.A) != lv.A.transpose().mul(lv.J)) return false;
    std::vector<int> star(s, -1);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        if (lv.J.at(i, j) != 0) star[i] = j;
      }
    }
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        if (lv.B.at(i, j) != lv.B.at(star[j], star[i])) return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  // 1. Closed forms for the even shift, from the library and the tool.
  {
    std::string note;
    bool ok = run_criterion(
        [&] {
          RatFunc zeta = zeta_rational(levels_of("even"));
          RatFunc g = generating_rational(levels_of("even"));
          bool match =
              zeta == RatFunc::from(ipoly({1, 1}), ipoly({1, -1, -1})) &&
              g == RatFunc::from(ipoly({0, 2, 2, -1, -1, -2, -1}),
                                 ipoly({1, 0, -2, 0, 0, 0, 1}));
          std::ostringstream out, err;
          int code = run_cli({"zeta", "--system", data_file("even.json"),
                              "--order", "0", "--closed-form"},
                             out, err);
          std::istringstream lines(out.str());
          std::string zline, gline;
          std::getline(lines, zline);
          std::getline(lines, gline);
          return match && code == 0 &&
                 zline == "zeta_T\t(1 + t)/(1 - t - t^2)" &&
                 gline == "G\t(2*t + 2*t^2 - t^3 - t^4 - 2*t^5 - t^6)/"
                          "(1 - 2*t^2 + t^6)";
        },
        &note);
    report(1, "even shift closed forms are exact" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  // 2. Series coefficients of G for the even shift through t^6.
  {
    std::string note;
    bool ok = run_criterion(
        [&] {
          Series s = expand(generating_rational(levels_of("even")), 6);
          std::vector<Rat> expected = {0, 2, 2, 3, 3, 4, 5};
          for (int i = 0; i <= 6; ++i) {
            if (s.at(i) != expected[i]) return false;
          }
          return true;
        },
        &note);
    report(2, "generating function of the even shift expands to 2,2,3,3,4,5" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  // 3. Formula counts equal brute force enumeration on the whole corpus.
  {
    std::string note;
    bool ok = run_criterion(
        [&] {
          for (const std::string& name : corpus_names()) {
            CorpusSystem sys = corpus_system(name);
            KriegerAnalysis k = analyze(sys.graph, sys.flip.tau);
            auto levels = build_all_levels(k.joint);
            for (int n = 1; n <= 8; ++n) {
              if (count_thmB(levels, n) != oracle_periodic(sys.graph, n)) {
                return false;
              }
              for (int delta = 0; delta <= 1; ++delta) {
                if (count_thmB(levels, n, delta) !=
                    oracle_flip_fixed(sys.graph, sys.flip, n, delta)) {
                  return false;
                }
              }
            }
          }
          return true;
        },
        &note);
    report(3, "matrix counts match brute force for N <= 8 on all corpus systems" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  // 4. The single matrix formulas agree with the level formulas on SFTs.
  {
    std::string note;
    bool ok = run_criterion(
        [&] {
          struct Case {
            const char* name;
            std::vector<std::vector<int>> a;
            std::vector<std::vector<int>> j;
          };
          for (const Case& c :
               {Case{"golden", {{1, 1}, {1, 0}}, {{1, 0}, {0, 1}}},
                Case{"full2swap", {{1, 1}, {1, 1}}, {{0, 1}, {1, 0}}}}) {
            IntMatrix a(2), j(2);
            for (int i = 0; i < 2; ++i) {
              for (int q = 0; q < 2; ++q) {
                a.at(i, q) = c.a[i][q];
                j.at(i, q) = c.j[i][q];
              }
            }
            CorpusSystem sys = corpus_system(c.name);
            KriegerAnalysis k = analyze(sys.graph, sys.flip.tau);
            auto levels = build_all_levels(k.joint);
            for (int m = 1; m <= 8; ++m) {
              if (count_thmA(a, j, m) != count_thmB(levels, m)) return false;
              for (int delta = 0; delta <= 1; ++delta) {
                if (count_thmA(a, j, m, delta) !=
                    count_thmB(levels, m, delta)) {
                  return false;
                }
              }
            }
          }
          return true;
        },
        &note);
    report(4, "single matrix and level formulas agree on both test SFTs" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  // 5. Structural invariants of every constructed chain.
  {
    std::string note;
    bool ok = run_criterion(
        [&] {
          for (const std::string& name : corpus_names()) {
            CorpusSystem sys = corpus_system(name);
            KriegerAnalysis k = analyze(sys.graph, sys.flip.tau);
            if (!check_chain_shape(k.joint)) return false;
            Restriction fin = build_finitary_chain(k);
            if (!check_chain_shape(fin.chain)) return false;
            Restriction comp = build_irreducible_component(k, fin);
            if (!check_chain_shape(comp.chain)) return false;
          }
          return true;
        },
        &note);
    report(5, "involution, symmetry and diamond freeness hold on every chain" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  // 6. The restricted component misses mirror fixed points the shift has.
  {
    std::string note;
    bool ok = run_criterion(
        [&] {
          CorpusSystem sys = corpus_system("even");
          KriegerAnalysis k = analyze(sys.graph, sys.flip.tau);
          auto levels = build_all_levels(k.joint);
          Restriction fin = build_finitary_chain(k);
          Restriction comp = build_irreducible_component(k, fin);
          for (int m = 1; m <= 3; ++m) {
            std::vector<int> zeros(static_cast<size_t>(2 * m), 0);
            if (chain_flip_fixed_in_fiber(comp.chain, 2 * m, 0, zeros) != 0) {
              return false;
            }
          }
          if (count_thmB(levels, 2, 0) != 2) return false;
          if (chain_flip_fixed_count(comp.chain, 2, 0) != 1) return false;
          std::ostringstream out, err;
          int code = run_cli({"count", "--system", data_file("even.json"),
                              "--max-m", "2", "--chain", "component",
                              "--verify"},
                             out, err);
          return code == 4;
        },
        &note);
    report(6, "component counts diverge from the shift and verify exits 4" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  // 7. Randomized signed inclusion-exclusion identity.
  {
    std::string note;
    bool ok = run_criterion(
        [&] { return lemma_2_3_check(1000, 8, 20240817u); }, &note);
    report(7, "1000 random closed invariant families sum to exactly one" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  // 8. Series machinery consistency.
  {
    std::string note;
    bool ok = run_criterion(
        [&] {
          for (const std::string& name : corpus_names()) {
            auto levels = levels_of(name);
            RatFunc zeta = zeta_rational(levels);
            Series logz = series_log(expand(zeta, 10));
            for (int m = 1; m <= 10; ++m) {
              if (Rat(m) * logz.at(m) != Rat(count_thmB(levels, m))) {
                return false;
              }
            }
            Series x = flip_zeta_series(zeta, generating_rational(levels), 12);
            Series expback = series_exp(series_log(x));
            Series sqback = series_sqrt(series_mul(x, x));
            for (int i = 0; i <= 12; ++i) {
              if (expback.at(i) != x.at(i)) return false;
              if (sqback.at(i) != x.at(i)) return false;
            }
          }
          return true;
        },
        &note);
    report(8, "log derivative recovers counts and exp/sqrt round trips are exact" +
                  (note.empty() ? "" : " (" + note + ")"),
           ok);
  }

  return failures;
}
