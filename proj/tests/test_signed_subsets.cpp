#include "doctest.h"

#include <functional>
#include <vector>

#include "flipcount/krieger.hpp"
#include "flipcount/matrix.hpp"
#include "flipcount/signed_subsets.hpp"

#include "helpers.hpp"

using namespace flipcount;
using flipcount::testing::even_graph;
using flipcount::testing::full2_graph;
using flipcount::testing::golden_graph;

namespace {

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_level_invariants(const JointStateChain& chain,
                            const std::vector<LevelMatrices>& levels) {
  for (const auto& lv : levels) {
    int n = lv.alphabet.size();
    REQUIRE(lv.A.size() == n);
    REQUIRE(lv.B.size() == n);
    REQUIRE(lv.J.size() == n);
    Int cap = factorial(lv.level);
    CHECK(lv.J.mul(lv.J) == IntMatrix::identity(n));
    CHECK(lv.J.mul(lv.A) == lv.A.transpose().mul(lv.J));
    CHECK(lv.B.is_zero_one());
    std::vector<int> star(n, -1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (lv.J.at(i, j) != 0) star[i] = j;
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(lv.B.at(i, j) == lv.B.at(star[j], star[i]));
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Int a = lv.A.at(i, j);
        if (a < 0) a = -a;
        CHECK(a <= cap);
        if (lv.B.at(i, j) == 0) CHECK(lv.A.at(i, j) == 0);
      }
    }
  }
  // Level one is the chain itself.
  REQUIRE(!levels.empty());
  CHECK(levels[0].level == 1);
  CHECK(levels[0].A == chain.A);
  CHECK(levels[0].B == chain.A);
  CHECK(levels[0].J == chain.J);
}

}  // namespace

TEST_CASE("level alphabet sizes for the even shift") {
  KriegerAnalysis k = analyze(even_graph(), {0, 1});
  auto levels = build_all_levels(k.joint);
  CHECK(max_level(k.joint) == 9);
  REQUIRE(levels.size() == 9);
  std::vector<int> sizes;
  for (const auto& lv : levels) sizes.push_back(lv.alphabet.size());
  CHECK(sizes == std::vector<int>{13, 42, 88, 127, 126, 84, 36, 9, 1});
  check_level_invariants(k.joint, levels);
}

TEST_CASE("level alphabet sizes for the golden mean shift") {
  KriegerAnalysis k = analyze(golden_graph(), {0, 1});
  auto levels = build_all_levels(k.joint);
  CHECK(max_level(k.joint) == 4);
  REQUIRE(levels.size() == 4);
  std::vector<int> sizes;
  for (const auto& lv : levels) sizes.push_back(lv.alphabet.size());
  CHECK(sizes == std::vector<int>{5, 6, 4, 1});
  check_level_invariants(k.joint, levels);
}

TEST_CASE("small chains have short level towers") {
  KriegerAnalysis k2 = analyze(full2_graph(), {1, 0});
  CHECK(max_level(k2.joint) == 1);
  auto levels2 = build_all_levels(k2.joint);
  REQUIRE(levels2.size() == 1);
  check_level_invariants(k2.joint, levels2);

  KriegerAnalysis k1 = analyze(flipcount::testing::full1_graph(), {0});
  CHECK(max_level(k1.joint) == 1);
  check_level_invariants(k1.joint, build_all_levels(k1.joint));
}

TEST_CASE("subset alphabets enumerate single symbol state sets") {
  KriegerAnalysis k = analyze(golden_graph(), {0, 1});
  SubsetAlphabet one = subset_alphabet(k.joint, 1);
  CHECK(one.size() == k.joint.num_states());
  SubsetAlphabet two = subset_alphabet(k.joint, 2);
  CHECK(two.size() == 6);
  for (const auto& members : two.members) {
    REQUIRE(members.size() == 2);
    CHECK(members[0] < members[1]);
    CHECK(k.joint.states[members[0]].symbol ==
          k.joint.states[members[1]].symbol);
  }
}

TEST_CASE("injection signs expand determinant style") {
  KriegerAnalysis k = analyze(even_graph(), {0, 1});
  auto levels = build_all_levels(k.joint);
  const auto& top = levels.back();
  REQUIRE(top.alphabet.size() == 1);
  CHECK(top.alphabet.members[0].size() == 9);

  // Against a direct two point check: singleton to singleton signs are the
  // plain matrix entries.
  auto [sum, flag] = injection_sign_sum(k.joint, {0}, {1});
  CHECK(sum == k.joint.A.at(0, 1));
  CHECK(flag == (k.joint.A.at(0, 1) == 0 ? 0 : 1));
}

TEST_CASE("closed existence graph walks carry unit signs summing to traces") {
  for (const char* name : {"even", "golden", "full2swap", "full1"}) {
    CAPTURE(name);
    CorpusSystem sys = corpus_system(name);
    KriegerAnalysis k = analyze(sys.graph, sys.flip.tau);
    for (const auto& lv : build_all_levels(k.joint)) {
      int n = lv.alphabet.size();
      for (int m = 1; m <= 6; ++m) {
        Int total = 0;
        std::vector<int> walk;
        std::function<void(int)> extend = [&](int v) {
          walk.push_back(v);
          if (static_cast<int>(walk.size()) == m + 1) {
            if (v == walk.front()) {
              Int prod = 1;
              for (int i = 0; i < m; ++i) {
                Int a = lv.A.at(walk[i], walk[i + 1]);
                CHECK((a == 1 || a == -1));
                prod *= a;
              }
              total += prod;
            }
          } else {
            for (int w = 0; w < n; ++w) {
              if (lv.B.at(v, w) == 1) extend(w);
            }
          }
          walk.pop_back();
        };
        for (int s = 0; s < n; ++s) extend(s);
        CHECK(total == lv.A.pow(m).trace());
      }
    }
  }
}
