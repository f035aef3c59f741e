#include "flipcount/krieger.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "flipcount/errors.hpp"

namespace flipcount {

namespace {

size_t monoid_cap() {
  const char* env = std::getenv("FLIPCOUNT_MONOID_CAP");
  if (env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<size_t>(v);
  }
  return 1000000;
}

}  // namespace

int RayClasses::find(const std::string& key) const {
  auto it = by_key.find(key);
  return it == by_key.end() ? -1 : it->second;
}

std::string JointStateChain::state_name(int i) const {
  const ChainState& s = states[i];
  return "F" + std::to_string(s.future) + "/" + alphabet[s.symbol] + "/P" +
         std::to_string(s.past);
}

RayClasses compute_ray_classes(const LabeledGraph& g) {
  int nsym = g.num_symbols();
  std::vector<BoolRel> gens;
  gens.reserve(nsym);
  for (int a = 0; a < nsym; ++a) gens.push_back(g.relation(a));

  size_t cap = monoid_cap();
  std::map<BoolRel, std::vector<int>> elements;
  std::queue<BoolRel> todo;
  for (int a = 0; a < nsym; ++a) {
    if (elements.emplace(gens[a], std::vector<int>{a}).second) {
      todo.push(gens[a]);
    }
  }
  while (!todo.empty()) {
    BoolRel e = todo.front();
    todo.pop();
    const std::vector<int>& word = elements.at(e);
    for (int a = 0; a < nsym; ++a) {
      BoolRel f = e.compose(gens[a]);
      if (elements.count(f)) continue;
      std::vector<int> fw = word;
      fw.push_back(a);
      elements.emplace(f, std::move(fw));
      if (elements.size() > cap) {
        throw MonoidBlowup("transition monoid exceeds " +
                           std::to_string(cap) + " elements");
      }
      todo.push(std::move(f));
    }
  }

  RayClasses rc;
  auto intern = [&](const Bitset& s, std::vector<int> witness) -> int {
    Dfa lang = forward_language_dfa(g, s);
    std::string key = canonical_key(lang);
    auto it = rc.by_key.find(key);
    if (it != rc.by_key.end()) return it->second;
    int id = rc.size();
    rc.members.push_back(s);
    rc.keys.push_back(key);
    rc.languages.push_back(std::move(lang));
    rc.witnesses.push_back(std::move(witness));
    rc.by_key.emplace(key, id);
    return id;
  };

  for (const auto& [rel, word] : elements) {
    if (!rel.is_idempotent()) continue;
    Bitset image = rel.full_image();
    if (image.none()) continue;
    intern(image, word);
  }
  for (int c = 0; c < rc.size(); ++c) {
    rc.step.push_back(std::vector<int>(nsym, -1));
    rc.first_symbols.push_back(Bitset(nsym));
    for (int a = 0; a < nsym; ++a) {
      Bitset next = gens[a].image(rc.members[c]);
      if (next.none()) continue;
      std::vector<int> w = rc.witnesses[c];
      w.push_back(a);
      rc.step[c][a] = intern(next, std::move(w));
      rc.first_symbols[c].set(a);
    }
  }
  return rc;
}

LabeledGraph chain_to_graph(const JointStateChain& chain) {
  LabeledGraph g;
  g.alphabet = chain.alphabet;
  for (int i = 0; i < chain.num_states(); ++i) {
    g.vertex_names.push_back(chain.state_name(i));
  }
  for (int s = 0; s < chain.num_states(); ++s) {
    for (int t = 0; t < chain.num_states(); ++t) {
      if (chain.A.at(s, t) == 1) {
        g.edges.push_back({s, chain.states[s].symbol, t});
      }
    }
  }
  g.validate();
  return g;
}

bool diamond_free(const JointStateChain& chain) {
  int n = chain.num_states();
  auto idx = [n](int u, int v) { return u * n + v; };
  auto label = [&](int s) { return chain.states[s].symbol; };
  auto reach = [&](const std::vector<char>& seed) {
    std::vector<char> seen = seed;
    std::queue<int> q;
    for (int i = 0; i < n * n; ++i) {
      if (seen[i]) q.push(i);
    }
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      int u = cur / n, v = cur % n;
      if (label(u) != label(v)) continue;
      for (int u2 = 0; u2 < n; ++u2) {
        if (chain.A.at(u, u2) != 1) continue;
        for (int v2 = 0; v2 < n; ++v2) {
          if (chain.A.at(v, v2) != 1) continue;
          if (!seen[idx(u2, v2)]) {
            seen[idx(u2, v2)] = 1;
            q.push(idx(u2, v2));
          }
        }
      }
    }
    return seen;
  };
  std::vector<char> diag(n * n, 0);
  for (int u = 0; u < n; ++u) diag[idx(u, u)] = 1;
  std::vector<char> stage1 = reach(diag);
  std::vector<char> off(n * n, 0);
  bool any_off = false;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && stage1[idx(u, v)]) {
        off[idx(u, v)] = 1;
        any_off = true;
      }
    }
  }
  if (!any_off) return true;
  std::vector<char> stage2 = reach(off);
  for (int u = 0; u < n; ++u) {
    if (stage2[idx(u, u)] && !off[idx(u, u)]) return false;
  }
  return true;
}

bool is_intrinsically_synchronizing(const FactorDfa& fac,
                                    const std::vector<int>& w) {
  if (!fac.accepts(w)) throw NotABlock("word is not a block of the shift");
  std::set<int> live_images;
  for (int s = 0; s < fac.num_states(); ++s) {
    if (!fac.live(s)) continue;
    int t = s;
    for (int a : w) t = fac.step(t, a);
    if (fac.live(t)) live_images.insert(t);
  }
  return live_images.size() == 1;
}

namespace {

void check_chain_invariants(const JointStateChain& chain,
                            const LabeledGraph& g) {
  int n = chain.num_states();
  for (int i = 0; i < n; ++i) {
    if (chain.star[chain.star[i]] != i) {
      throw StarMismatch("state involution does not square to identity");
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (chain.A.at(s, t) != chain.A.at(chain.star[t], chain.star[s])) {
        throw InvariantViolation(
            "transition matrix is not symmetric under the involution");
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    bool row = false, col = false;
    for (int t = 0; t < n; ++t) {
      if (chain.A.at(s, t) == 1) row = true;
      if (chain.A.at(t, s) == 1) col = true;
    }
    if (!row || !col) {
      throw InvariantViolation("chain state " + chain.state_name(s) +
                               " is not essential");
    }
  }
  if (!diamond_free(chain)) {
    throw InvariantViolation("chain has an ambiguity diamond");
  }
  LabeledGraph cg = chain_to_graph(chain);
  if (!same_language(forward_language_dfa(cg, full_vertex_set(cg)),
                     forward_language_dfa(g, full_vertex_set(g)))) {
    throw InvariantViolation("chain label language differs from the shift");
  }
}

}  // namespace

KriegerAnalysis analyze(const LabeledGraph& raw, const std::vector<int>& tau) {
  KriegerAnalysis k;
  k.graph = trim_essential(raw);
  if (static_cast<int>(tau.size()) != k.graph.num_symbols()) {
    throw SchemaError("tau must cover the whole alphabet");
  }
  for (int a = 0; a < k.graph.num_symbols(); ++a) {
    if (tau[a] < 0 || tau[a] >= k.graph.num_symbols()) {
      throw BadSymbol("tau maps symbol " + std::to_string(a) +
                      " out of range");
    }
  }
  for (int a = 0; a < k.graph.num_symbols(); ++a) {
    if (tau[tau[a]] != a) {
      throw NotInvolution("tau is not an involution at symbol " +
                          k.graph.alphabet[a]);
    }
  }
  k.tau = tau;
  k.futures = compute_ray_classes(k.graph);
  k.pasts = compute_ray_classes(k.graph.reversed());

  k.star_future.assign(k.futures.size(), -1);
  k.star_past.assign(k.pasts.size(), -1);
  for (int f = 0; f < k.futures.size(); ++f) {
    std::string key = canonical_key(relabel_dfa(k.futures.languages[f], tau));
    k.star_future[f] = k.pasts.find(key);
    if (k.star_future[f] < 0) {
      throw StarMismatch("future class " + std::to_string(f) +
                         " has no mirror past class");
    }
  }
  for (int p = 0; p < k.pasts.size(); ++p) {
    std::string key = canonical_key(relabel_dfa(k.pasts.languages[p], tau));
    k.star_past[p] = k.futures.find(key);
    if (k.star_past[p] < 0) {
      throw StarMismatch("past class " + std::to_string(p) +
                         " has no mirror future class");
    }
  }
  for (int f = 0; f < k.futures.size(); ++f) {
    if (k.star_past[k.star_future[f]] != f) {
      throw StarMismatch("class mirror maps are not mutually inverse");
    }
  }

  JointStateChain& chain = k.joint;
  chain.alphabet = k.graph.alphabet;
  chain.tau = tau;
  std::map<std::tuple<int, int, int>, int> state_index;
  int nsym = k.graph.num_symbols();
  for (int f = 0; f < k.futures.size(); ++f) {
    for (int a = 0; a < nsym; ++a) {
      if (!k.futures.first_symbols[f].test(a)) continue;
      for (int p = 0; p < k.pasts.size(); ++p) {
        if (!k.pasts.first_symbols[p].test(a)) continue;
        state_index.emplace(std::make_tuple(f, a, p),
                            static_cast<int>(chain.states.size()));
        chain.states.push_back({f, a, p});
      }
    }
  }
  int n = chain.num_states();
  chain.A = IntMatrix(n);
  for (int s = 0; s < n; ++s) {
    const ChainState& cs = chain.states[s];
    int fnext = k.futures.step[cs.future][cs.symbol];
    for (int t = 0; t < n; ++t) {
      const ChainState& ct = chain.states[t];
      if (ct.future == fnext &&
          k.pasts.step[ct.past][ct.symbol] == cs.past) {
        chain.A.at(s, t) = 1;
      }
    }
  }
  chain.star.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    const ChainState& cs = chain.states[s];
    auto it = state_index.find(std::make_tuple(
        k.star_past[cs.past], tau[cs.symbol], k.star_future[cs.future]));
    if (it == state_index.end()) {
      throw StarMismatch("mirror of state " + chain.state_name(s) +
                         " is not a chain state");
    }
    chain.star[s] = it->second;
  }
  chain.J = IntMatrix(n);
  for (int s = 0; s < n; ++s) chain.J.at(s, chain.star[s]) = 1;

  check_chain_invariants(chain, k.graph);
  return k;
}

namespace {

Restriction restrict_states(const JointStateChain& parent,
                            const std::vector<int>& keep,
                            const std::vector<int>& parent_origin) {
  Restriction out;
  out.factors_onto = false;
  JointStateChain& chain = out.chain;
  chain.alphabet = parent.alphabet;
  chain.tau = parent.tau;
  std::vector<int> pos(parent.num_states(), -1);
  for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  int n = static_cast<int>(keep.size());
  chain.A = IntMatrix(n);
  chain.J = IntMatrix(n);
  chain.star.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    chain.states.push_back(parent.states[keep[i]]);
    out.origin.push_back(parent_origin.empty() ? keep[i]
                                               : parent_origin[keep[i]]);
  }
  for (int i = 0; i < n; ++i) {
    int target = pos[parent.star[keep[i]]];
    if (target < 0) {
      throw InvariantViolation(
          "restricted state set is not closed under the involution");
    }
    chain.star[i] = target;
    chain.J.at(i, target) = 1;
    for (int j = 0; j < n; ++j) {
      chain.A.at(i, j) = parent.A.at(keep[i], keep[j]);
    }
  }
  return out;
}

// Language of the restricted labeling, ignoring states that no longer sit on
// a bi-infinite path.
bool presents_same_shift(const JointStateChain& chain, const LabeledGraph& g) {
  if (chain.num_states() == 0) return false;
  LabeledGraph cg = chain_to_graph(chain);
  if (!cg.is_essential()) {
    try {
      cg = trim_essential(cg);
    } catch (const EmptyShift&) {
      return false;
    }
  }
  return same_language(forward_language_dfa(cg, full_vertex_set(cg)),
                       forward_language_dfa(g, full_vertex_set(g)));
}

// Deterministic walk over pairs (live factor-DFA image, vertex image).
// Words with a singleton live image are the intrinsically synchronizing
// blocks; the vertex image then identifies the follower class.
std::set<int> synchronizable_classes(const LabeledGraph& g,
                                     const RayClasses& classes) {
  FactorDfa fac = factor_dfa(g);
  int nsym = g.num_symbols();
  std::vector<BoolRel> gens;
  for (int a = 0; a < nsym; ++a) gens.push_back(g.relation(a));

  Bitset q0(fac.num_states());
  for (int s = 0; s < fac.num_states(); ++s) {
    if (fac.live(s)) q0.set(s);
  }
  Bitset s0 = full_vertex_set(g);

  std::set<int> found;
  std::set<std::pair<Bitset, Bitset>> seen;
  std::queue<std::pair<Bitset, Bitset>> todo;
  seen.insert({q0, s0});
  todo.push({q0, s0});
  while (!todo.empty()) {
    auto [q, s] = todo.front();
    todo.pop();
    if (q.count() == 1) {
      int id = classes.find(canonical_key(forward_language_dfa(g, s)));
      if (id < 0) {
        throw InvariantViolation(
            "synchronizing word reaches an unknown ray class");
      }
      found.insert(id);
    }
    for (int a = 0; a < nsym; ++a) {
      Bitset q2(fac.num_states());
      for (int st = q.first(); st >= 0; st = q.next(st)) {
        int t = fac.step(st, a);
        if (fac.live(t)) q2.set(t);
      }
      if (q2.none()) continue;
      Bitset s2 = gens[a].image(s);
      auto key = std::make_pair(q2, s2);
      if (seen.insert(key).second) todo.push(key);
    }
  }
  return found;
}

}  // namespace

Restriction build_finitary_chain(const KriegerAnalysis& k) {
  std::set<int> fut0 = synchronizable_classes(k.graph, k.futures);
  std::set<int> pas0 = synchronizable_classes(k.graph.reversed(), k.pasts);
  std::vector<int> keep;
  for (int s = 0; s < k.joint.num_states(); ++s) {
    const ChainState& cs = k.joint.states[s];
    if (fut0.count(cs.future) && pas0.count(cs.past)) keep.push_back(s);
  }
  Restriction out = restrict_states(k.joint, keep, {});
  out.factors_onto = presents_same_shift(out.chain, k.graph);
  if (k.graph.strongly_connected() && !out.factors_onto) {
    throw InvariantViolation(
        "finitary chain of an irreducible shift lost part of the language");
  }
  return out;
}

namespace {

// Acceptor of the intrinsically synchronizing blocks, read front to back:
// tracks the live factor-DFA images of all left contexts and accepts once
// they agree on a single state.
Dfa sync_words_dfa(const LabeledGraph& g) {
  FactorDfa fac = factor_dfa(g);
  int nsym = g.num_symbols();
  Dfa d;
  d.nsym = nsym;
  std::map<Bitset, int> index;
  std::vector<Bitset> subsets;
  Bitset q0(fac.num_states());
  for (int s = 0; s < fac.num_states(); ++s) {
    if (fac.live(s)) q0.set(s);
  }
  index.emplace(q0, 0);
  subsets.push_back(q0);
  for (size_t i = 0; i < subsets.size(); ++i) {
    Bitset q = subsets[i];
    d.next.push_back(std::vector<int>(nsym, -1));
    d.accept.push_back(q.count() == 1);
    for (int a = 0; a < nsym; ++a) {
      Bitset q2(fac.num_states());
      for (int st = q.first(); st >= 0; st = q.next(st)) {
        int t = fac.step(st, a);
        if (fac.live(t)) q2.set(t);
      }
      auto it = index.find(q2);
      if (it == index.end()) {
        it = index.emplace(q2, static_cast<int>(subsets.size())).first;
        subsets.push_back(q2);
      }
      d.next[i][a] = it->second;
    }
  }
  return d;
}

struct PredecessorTracker {
  Dfa skeleton;                // accept flags left blank
  std::vector<int> class_of;   // past class per automaton state, -1 if none
};

// Reads a word back to front and tracks the vertices from which the suffix
// consumed so far can still be read; the stabilized set identifies the
// predecessor class of the word.
PredecessorTracker predecessor_tracker(const LabeledGraph& g,
                                       const RayClasses& pasts) {
  LabeledGraph rev = g.reversed();
  int nsym = g.num_symbols();
  std::vector<BoolRel> gens;
  for (int a = 0; a < nsym; ++a) gens.push_back(rev.relation(a));

  PredecessorTracker out;
  out.skeleton.nsym = nsym;
  std::map<Bitset, int> index;
  std::vector<Bitset> subsets;
  Bitset t0 = full_vertex_set(g);
  index.emplace(t0, 0);
  subsets.push_back(t0);
  for (size_t i = 0; i < subsets.size(); ++i) {
    Bitset t = subsets[i];
    out.skeleton.next.push_back(std::vector<int>(nsym, -1));
    out.skeleton.accept.push_back(0);
    out.class_of.push_back(
        t.any() ? pasts.find(canonical_key(forward_language_dfa(rev, t)))
                : -1);
    for (int a = 0; a < nsym; ++a) {
      Bitset t2 = gens[a].image(t);
      auto it = index.find(t2);
      if (it == index.end()) {
        it = index.emplace(t2, static_cast<int>(subsets.size())).first;
        subsets.push_back(t2);
      }
      out.skeleton.next[i][a] = it->second;
    }
  }
  return out;
}

Dfa reversed_language(const Dfa& d) {
  return minimize_dfa(determinize(reverse_nfa(d)));
}

}  // namespace

Restriction build_irreducible_component(const KriegerAnalysis& k,
                                        const Restriction& finitary) {
  if (!k.graph.strongly_connected()) {
    throw NotIrreducible("presenting graph is not irreducible");
  }
  Dfa sync_rev = reversed_language(sync_words_dfa(k.graph));
  PredecessorTracker tracker = predecessor_tracker(k.graph, k.pasts);

  std::map<std::pair<int, int>, Dfa> deriv_rev;
  auto derivative_reversed = [&](int future, int a) -> const Dfa& {
    auto key = std::make_pair(future, a);
    auto it = deriv_rev.find(key);
    if (it == deriv_rev.end()) {
      Dfa d = k.futures.languages[future];
      d.initial = d.step(d.initial, a);
      it = deriv_rev.emplace(key, reversed_language(d)).first;
    }
    return it->second;
  };

  std::vector<int> keep;
  for (int i = 0; i < finitary.chain.num_states(); ++i) {
    const ChainState& cs = finitary.chain.states[i];
    Dfa tracker_p = tracker.skeleton;
    for (int s = 0; s < tracker_p.num_states(); ++s) {
      tracker_p.accept[s] = (tracker.class_of[s] == cs.past);
    }
    Dfa joint_test = product(
        product(sync_rev, derivative_reversed(cs.future, cs.symbol),
                ProductMode::And),
        tracker_p, ProductMode::And);
    if (!language_empty(joint_test)) keep.push_back(i);
  }
  Restriction out = restrict_states(finitary.chain, keep, finitary.origin);
  LabeledGraph cg = chain_to_graph(out.chain);
  if (out.chain.num_states() == 0 || !cg.is_essential() ||
      !cg.strongly_connected()) {
    throw InvariantViolation("distinguished component is not irreducible");
  }
  out.factors_onto = presents_same_shift(out.chain, k.graph);
  return out;
}

}  // namespace flipcount
