#include "flipcount/signed_subsets.hpp"

#include <algorithm>
#include <map>

#include "flipcount/errors.hpp"

namespace flipcount {

SubsetAlphabet subset_alphabet(const JointStateChain& chain, int k) {
  if (k < 1) throw SchemaError("subset level must be positive");
  SubsetAlphabet out;
  out.level = k;
  std::map<int, std::vector<int>> fibers;
  for (int s = 0; s < chain.num_states(); ++s) {
    fibers[chain.states[s].symbol].push_back(s);
  }
  for (const auto& [sym, fiber] : fibers) {
    (void)sym;
    if (static_cast<int>(fiber.size()) < k) continue;
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int depth, int from) -> void {
      if (depth == k) {
        out.members.push_back(pick);
        return;
      }
      for (size_t i = from; i + (k - depth) <= fiber.size(); ++i) {
        pick[depth] = fiber[i];
        self(self, depth + 1, static_cast<int>(i) + 1);
      }
    };
    rec(rec, 0, 0);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::pair<Int, int> injection_sign_sum(const JointStateChain& chain,
                                       const std::vector<int>& s1,
                                       const std::vector<int>& s2) {
  int k = static_cast<int>(s1.size());
  Int total = 0;
  int any = 0;
  std::vector<char> used(s2.size(), 0);
  auto rec = [&](auto&& self, int depth, int inversions) -> void {
    if (depth == k) {
      any = 1;
      total += (inversions % 2 == 0) ? 1 : -1;
      return;
    }
    for (int j = 0; j < static_cast<int>(s2.size()); ++j) {
      if (used[j]) continue;
      if (chain.A.at(s1[depth], s2[j]) != 1) continue;
      int added = 0;
      for (int j2 = j + 1; j2 < static_cast<int>(s2.size()); ++j2) {
        if (used[j2]) ++added;
      }
      used[j] = 1;
      self(self, depth + 1, inversions + added);
      used[j] = 0;
    }
  };
  rec(rec, 0, 0);
  return {total, any};
}

namespace {

// Sign and target of the involution applied elementwise to a sorted subset.
std::pair<std::vector<int>, int> star_image(const JointStateChain& chain,
                                            const std::vector<int>& s) {
  std::vector<int> image;
  image.reserve(s.size());
  for (int st : s) image.push_back(chain.star[st]);
  int inversions = 0;
  for (size_t i = 0; i < image.size(); ++i) {
    for (size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] > image[j]) ++inversions;
    }
  }
  std::sort(image.begin(), image.end());
  return {image, inversions % 2 == 0 ? 1 : -1};
}

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_level_invariants(const JointStateChain& chain,
                            const LevelMatrices& lm) {
  int n = lm.alphabet.size();
  int k = lm.level;
  Int kfact = factorial(k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (abs(lm.A.at(i, j)) > kfact) {
        throw InvariantViolation("injection sign sum exceeds k!");
      }
      if (lm.B.at(i, j) == 0 && lm.A.at(i, j) != 0) {
        throw InvariantViolation("sign sum nonzero without any injection");
      }
    }
  }
  if (lm.J.mul(lm.J) != IntMatrix::identity(n)) {
    throw InvariantViolation("level involution does not square to identity");
  }
  if (lm.J.mul(lm.A) != lm.A.transpose().mul(lm.J)) {
    throw InvariantViolation("level A breaks the involution symmetry");
  }
  std::vector<int> star(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (lm.J.at(i, j) != 0) star[i] = j;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (lm.B.at(i, j) != lm.B.at(star[j], star[i])) {
        throw InvariantViolation("level B breaks the involution symmetry");
      }
    }
  }
  if (k == 1) {
    if (lm.A != chain.A || lm.B != chain.A || lm.J != chain.J) {
      throw InvariantViolation("level one does not reproduce the chain");
    }
  }
}

}  // namespace

LevelMatrices build_level_matrices(const JointStateChain& chain, int k) {
  LevelMatrices lm;
  lm.level = k;
  lm.alphabet = subset_alphabet(chain, k);
  int n = lm.alphabet.size();
  if (n == 0) {
    throw IncompleteLevels("no level " + std::to_string(k) + " subsets");
  }
  lm.A = IntMatrix(n);
  lm.B = IntMatrix(n);
  lm.J = IntMatrix(n);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(lm.alphabet.members[i], i);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [sum, any] =
          injection_sign_sum(chain, lm.alphabet.members[i],
                             lm.alphabet.members[j]);
      lm.A.at(i, j) = sum;
      lm.B.at(i, j) = any;
    }
    auto [image, sign] = star_image(chain, lm.alphabet.members[i]);
    auto it = index.find(image);
    if (it == index.end()) {
      throw InvariantViolation("involution image leaves the subset alphabet");
    }
    lm.J.at(i, it->second) = sign;
  }
  check_level_invariants(chain, lm);
  return lm;
}

int max_level(const JointStateChain& chain) {
  std::map<int, int> fiber_sizes;
  for (int s = 0; s < chain.num_states(); ++s) {
    fiber_sizes[chain.states[s].symbol] += 1;
  }
  int best = 0;
  for (const auto& [sym, count] : fiber_sizes) {
    (void)sym;
    best = std::max(best, count);
  }
  return best;
}

std::vector<LevelMatrices> build_all_levels(const JointStateChain& chain) {
  std::vector<LevelMatrices> out;
  int r = max_level(chain);
  out.reserve(r);
  for (int k = 1; k <= r; ++k) out.push_back(build_level_matrices(chain, k));
  return out;
}

}  // namespace flipcount
