#include "flipcount/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "flipcount/errors.hpp"

namespace flipcount {

namespace {

int mod_n(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

LabeledGraph make_graph(std::vector<std::string> alphabet, std::vector<std::string> vertices,
                        std::vector<LabeledGraph::Edge> edges) {
  LabeledGraph g;
  g.alphabet = std::move(alphabet);
  g.vertex_names = std::move(vertices);
  g.edges = std::move(edges);
  g.validate();
  return g;
}

// Depth-first enumeration of length-n words all of whose prefixes are blocks.
template <typename Visit>
void enumerate_pruned_words(const LabeledGraph& g, int n, Visit&& visit) {
  FactorDfa fac = factor_dfa(g);
  std::vector<int> word(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int state) -> void {
    if (pos == n) {
      visit(word);
      return;
    }
    for (int a = 0; a < g.num_symbols(); ++a) {
      int t = fac.step(state, a);
      if (!fac.live(t)) continue;
      word[static_cast<size_t>(pos)] = a;
      self(self, pos + 1, t);
    }
  };
  rec(rec, 0, fac.initial());
  (void)word;
}

bool flip_condition_holds(const LabeledGraph& g, const FlipSpec& flip, const std::vector<int>& w,
                          int delta) {
  const int n = static_cast<int>(w.size());
  if (flip.one_block()) {
    if (static_cast<int>(flip.tau.size()) != g.num_symbols()) {
      throw SchemaError("symbol involution table size must match the alphabet");
    }
    for (int i = 0; i < n; ++i) {
      int j = mod_n(-static_cast<long long>(i) - delta, n);
      int sym = w[static_cast<size_t>(j)];
      if (sym < 0 || sym >= g.num_symbols()) throw BadSymbol("symbol out of range");
      if (w[static_cast<size_t>(i)] != flip.tau[static_cast<size_t>(sym)]) return false;
    }
    return true;
  }
  const int r = flip.radius;
  std::vector<int> block(static_cast<size_t>(2 * r + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= 2 * r; ++j) {
      block[static_cast<size_t>(j)] = w[static_cast<size_t>(mod_n(-static_cast<long long>(i) - delta - r + j, n))];
    }
    auto it = flip.window.find(block);
    if (it == flip.window.end()) {
      throw SchemaError("window table is missing a block of the periodic point");
    }
    if (w[static_cast<size_t>(i)] != it->second) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> corpus_names() { return {"even", "golden", "full2swap", "full1"}; }

CorpusSystem corpus_system(const std::string& name) {
  CorpusSystem sys;
  sys.name = name;
  if (name == "even") {
    sys.graph = make_graph({"0", "1"}, {"p", "q"}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    sys.flip.tau = {0, 1};
  } else if (name == "golden") {
    sys.graph = make_graph({"a", "b"}, {"a", "b"}, {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}});
    sys.flip.tau = {0, 1};
  } else if (name == "full2swap") {
    sys.graph = make_graph({"0", "1"}, {"v"}, {{0, 0, 0}, {0, 1, 0}});
    sys.flip.tau = {1, 0};
  } else if (name == "full1") {
    sys.graph = make_graph({"a"}, {"v"}, {{0, 0, 0}});
    sys.flip.tau = {0};
  } else {
    throw SchemaError("unknown corpus system: " + name);
  }
  flip_axiom_check(sys.graph, sys.flip);
  return sys;
}

std::vector<std::vector<int>> oracle_periodic_words(const LabeledGraph& g, int m) {
  if (m < 1) throw SchemaError("period must be at least one");
  std::vector<std::vector<int>> out;
  enumerate_pruned_words(g, m, [&](const std::vector<int>& w) {
    if (periodic_word_test(g, w)) out.push_back(w);
  });
  return out;
}

Int oracle_periodic(const LabeledGraph& g, int m) {
  return Int(oracle_periodic_words(g, m).size());
}

std::vector<std::vector<int>> oracle_flip_fixed_words(const LabeledGraph& g, const FlipSpec& flip, int n,
                                                      int delta) {
  if (n < 1) throw SchemaError("period must be at least one");
  std::vector<std::vector<int>> out;
  enumerate_pruned_words(g, n, [&](const std::vector<int>& w) {
    if (periodic_word_test(g, w) && flip_condition_holds(g, flip, w, delta)) out.push_back(w);
  });
  return out;
}

Int oracle_flip_fixed(const LabeledGraph& g, const FlipSpec& flip, int n, int delta) {
  return Int(oracle_flip_fixed_words(g, flip, n, delta).size());
}

namespace {

Int chain_count_impl(const JointStateChain& chain, int n, bool flip_fixed, int delta,
                     const std::vector<int>* fiber) {
  if (n < 1) throw SchemaError("period must be at least one");
  if (fiber && fiber->empty()) throw SchemaError("fiber word must be nonempty");
  const int s = chain.num_states();
  std::vector<std::vector<int>> adj(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (chain.A.at(i, j) != 0) adj[static_cast<size_t>(i)].push_back(j);
    }
  }
  auto allowed = [&](int pos, int state) {
    if (!fiber) return true;
    int want = (*fiber)[static_cast<size_t>(pos % static_cast<int>(fiber->size()))];
    return chain.states[static_cast<size_t>(state)].symbol == want;
  };
  Int total = 0;
  std::vector<int> path(static_cast<size_t>(n));
  auto accept = [&]() {
    if (chain.A.at(path[static_cast<size_t>(n - 1)], path[0]) == 0) return false;
    if (!flip_fixed) return true;
    for (int i = 0; i < n; ++i) {
      int j = mod_n(-static_cast<long long>(i) - delta, n);
      if (chain.star[static_cast<size_t>(path[static_cast<size_t>(j)])] != path[static_cast<size_t>(i)]) {
        return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (accept()) ++total;
      return;
    }
    if (pos == 0) {
      for (int v = 0; v < s; ++v) {
        if (!allowed(0, v)) continue;
        path[0] = v;
        self(self, 1);
      }
      return;
    }
    for (int t : adj[static_cast<size_t>(path[static_cast<size_t>(pos - 1)])]) {
      if (!allowed(pos, t)) continue;
      path[static_cast<size_t>(pos)] = t;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

Int chain_periodic_count(const JointStateChain& chain, int n) {
  return chain_count_impl(chain, n, false, 0, nullptr);
}

Int chain_flip_fixed_count(const JointStateChain& chain, int n, int delta) {
  return chain_count_impl(chain, n, true, delta, nullptr);
}

Int chain_flip_fixed_in_fiber(const JointStateChain& chain, int n, int delta,
                              const std::vector<int>& word) {
  return chain_count_impl(chain, n, true, delta, &word);
}

namespace {

// Idempotent power of a relation, found by walking its cyclic subsemigroup.
BoolRel idempotent_power(const BoolRel& r) {
  std::vector<BoolRel> seen;
  BoolRel p = r;
  while (true) {
    for (size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == p) {
        // powers cycle with index i+1 and period len-i; pick a multiple of
        // the period at or past the index
        int index = static_cast<int>(i) + 1;
        int period = static_cast<int>(seen.size()) - static_cast<int>(i);
        int target = period;
        while (target < index) target += period;
        BoolRel e = seen[static_cast<size_t>(index - 1)];
        for (int k = index; k < target; ++k) e = e.compose(r);
        if (!e.is_idempotent()) throw InvariantViolation("idempotent power search failed");
        return e;
      }
    }
    seen.push_back(p);
    p = p.compose(r);
  }
}

}  // namespace

int sample_ray_class_count(const LabeledGraph& g, int max_cycle, int max_tail) {
  if (max_cycle < 1 || max_tail < 0) throw SchemaError("ray sampling bounds out of range");
  const int nsym = g.num_symbols();
  std::vector<BoolRel> rel;
  rel.reserve(static_cast<size_t>(nsym));
  for (int a = 0; a < nsym; ++a) rel.push_back(g.relation(a));

  std::set<std::string> keys;
  std::set<Bitset> stabilized;
  std::vector<int> cycle;
  auto visit_cycle = [&](auto&& self, int remaining, const BoolRel& acc) -> void {
    if (!cycle.empty()) {
      BoolRel e = idempotent_power(acc);
      Bitset c = e.full_image();
      if (c.any()) stabilized.insert(c);
    }
    if (remaining == 0) return;
    for (int a = 0; a < nsym; ++a) {
      cycle.push_back(a);
      self(self, remaining - 1, cycle.size() == 1 ? rel[static_cast<size_t>(a)]
                                                  : acc.compose(rel[static_cast<size_t>(a)]));
      cycle.pop_back();
    }
  };
  visit_cycle(visit_cycle, max_cycle, BoolRel(g.num_vertices()));

  std::set<Bitset> reached;
  for (const Bitset& c : stabilized) {
    std::vector<Bitset> frontier = {c};
    reached.insert(c);
    for (int len = 1; len <= max_tail; ++len) {
      std::vector<Bitset> next_frontier;
      for (const Bitset& s : frontier) {
        for (int a = 0; a < nsym; ++a) {
          Bitset t = rel[static_cast<size_t>(a)].image(s);
          if (t.none()) continue;
          if (reached.insert(t).second) next_frontier.push_back(t);
        }
      }
      frontier = std::move(next_frontier);
    }
  }
  for (const Bitset& s : reached) {
    keys.insert(canonical_key(forward_language_dfa(g, s)));
  }
  return static_cast<int>(keys.size());
}

int permutation_sign_on(const std::vector<int>& perm, std::uint64_t subset) {
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i) {
    if ((subset >> i) & 1u) {
      if (!((subset >> perm[static_cast<size_t>(i)]) & 1u)) {
        throw HypothesisConstructionFailure("subset is not invariant under the permutation");
      }
    }
  }
  int sign = 1;
  std::uint64_t left = subset;
  while (left != 0) {
    int start = __builtin_ctzll(left);
    int len = 0;
    int cur = start;
    do {
      left &= ~(std::uint64_t(1) << cur);
      cur = perm[static_cast<size_t>(cur)];
      ++len;
    } while (cur != start);
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Int invariant_family_signed_sum(const std::vector<int>& perm, const std::vector<std::uint64_t>& family) {
  Int sum = 0;
  for (std::uint64_t e : family) {
    if (e == 0) continue;
    int size_parity = __builtin_popcountll(e) % 2;
    int term = permutation_sign_on(perm, e);
    sum += (size_parity == 1) ? term : -term;
  }
  return sum;
}

bool lemma_2_3_check(int trials, int max_size, std::uint64_t seed) {
  if (trials < 1) throw SchemaError("trial count must be at least one");
  if (max_size < 1 || max_size > 12) throw SchemaError("element count out of supported range");
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::uint64_t> orbits;
    std::uint64_t placed = 0;
    for (int i = 0; i < n; ++i) {
      if ((placed >> i) & 1u) continue;
      std::uint64_t orbit = 0;
      int cur = i;
      do {
        orbit |= std::uint64_t(1) << cur;
        cur = perm[static_cast<size_t>(cur)];
      } while (cur != i);
      placed |= orbit;
      orbits.push_back(orbit);
    }

    const int num_orbits = static_cast<int>(orbits.size());
    std::uint64_t pick = 1 + rng() % ((std::uint64_t(1) << num_orbits) - 1);
    std::uint64_t g_set = 0;
    std::vector<std::uint64_t> inside, outside;
    for (int i = 0; i < num_orbits; ++i) {
      if ((pick >> i) & 1u) {
        g_set |= orbits[static_cast<size_t>(i)];
        inside.push_back(orbits[static_cast<size_t>(i)]);
      } else {
        outside.push_back(orbits[static_cast<size_t>(i)]);
      }
    }
    if (g_set == 0) throw HypothesisConstructionFailure("selected orbit union is empty");

    std::set<std::uint64_t> family;
    const std::uint64_t inside_count = std::uint64_t(1) << inside.size();
    for (std::uint64_t mask = 0; mask < inside_count; ++mask) {
      std::uint64_t e = 0;
      for (size_t i = 0; i < inside.size(); ++i) {
        if ((mask >> i) & 1u) e |= inside[i];
      }
      family.insert(e);
    }
    const int extras = static_cast<int>(rng() % 4);
    for (int i = 0; i < extras && !outside.empty(); ++i) {
      std::uint64_t e = 0;
      for (const std::uint64_t orbit : outside) {
        if (rng() % 2 == 0) e |= orbit;
      }
      family.insert(e);
    }

    std::vector<std::uint64_t> work(family.begin(), family.end());
    while (!work.empty()) {
      std::uint64_t s = work.back();
      work.pop_back();
      std::vector<std::uint64_t> snapshot(family.begin(), family.end());
      for (std::uint64_t t : snapshot) {
        for (std::uint64_t candidate : {s | t, s & ~t, t & ~s}) {
          if (family.insert(candidate).second) work.push_back(candidate);
        }
      }
    }

    std::vector<std::uint64_t> sets(family.begin(), family.end());
    for (std::uint64_t e : sets) {
      std::uint64_t image = 0;
      for (int i = 0; i < n; ++i) {
        if ((e >> i) & 1u) image |= std::uint64_t(1) << perm[static_cast<size_t>(i)];
      }
      if (image != e) throw HypothesisConstructionFailure("closure produced a non-invariant set");
    }

    if (invariant_family_signed_sum(perm, sets) != 1) return false;
  }
  return true;
}

}  // namespace flipcount
