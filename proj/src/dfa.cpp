#include "flipcount/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "flipcount/errors.hpp"

namespace flipcount {

int Dfa::run(const std::vector<int>& word) const {
  int s = initial;
  for (int a : word) {
    if (a < 0 || a >= nsym) throw BadSymbol("symbol outside the alphabet");
    s = next[s][a];
  }
  return s;
}

bool Dfa::accepts(const std::vector<int>& word) const {
  return accept[run(word)] != 0;
}

Dfa determinize(const Nfa& nfa) {
  Dfa d;
  d.nsym = nfa.nsym;
  std::map<Bitset, int> index;
  std::vector<Bitset> subsets;
  auto intern = [&](const Bitset& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = (int)subsets.size();
    index.emplace(s, id);
    subsets.push_back(s);
    d.next.emplace_back(nfa.nsym, -1);
    d.accept.push_back(s.intersects(nfa.accept) ? 1 : 0);
    return id;
  };
  d.initial = intern(nfa.initial);
  for (int s = 0; s < (int)subsets.size(); ++s) {
    for (int a = 0; a < nfa.nsym; ++a) {
      Bitset img(nfa.num_states() ? nfa.initial.size() : 0);
      const Bitset& cur = subsets[s];
      for (int q = cur.first(); q >= 0; q = cur.next(q)) img |= nfa.next[q][a];
      d.next[s][a] = intern(img);
    }
  }
  return d;
}

Dfa minimize_dfa(const Dfa& d) {
  int n = d.num_states();
  std::vector<int> order;
  std::vector<int> seen(n, -1);
  order.push_back(d.initial);
  seen[d.initial] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < d.nsym; ++a) {
      int t = d.next[order[i]][a];
      if (seen[t] < 0) {
        seen[t] = (int)order.size();
        order.push_back(t);
      }
    }
  int m = (int)order.size();
  std::vector<int> cls(m);
  for (int i = 0; i < m; ++i) cls[i] = d.accept[order[i]] ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next_cls(m);
    for (int i = 0; i < m; ++i) {
      std::vector<int> sig{cls[i]};
      for (int a = 0; a < d.nsym; ++a) sig.push_back(cls[seen[d.next[order[i]][a]]]);
      auto [it, fresh] = sig_index.emplace(sig, (int)sig_index.size());
      next_cls[i] = it->second;
      (void)fresh;
    }
    bool stable = true;
    for (int i = 0; i < m; ++i)
      if (next_cls[i] != cls[i]) stable = false;
    cls.swap(next_cls);
    if (stable) break;
  }
  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa out;
  out.nsym = d.nsym;
  out.next.assign(k, std::vector<int>(d.nsym, -1));
  out.accept.assign(k, 0);
  for (int i = 0; i < m; ++i) {
    int c = cls[i];
    out.accept[c] = d.accept[order[i]];
    for (int a = 0; a < d.nsym; ++a)
      out.next[c][a] = cls[seen[d.next[order[i]][a]]];
  }
  out.initial = cls[0];
  return canonicalize(out);
}

Dfa canonicalize(const Dfa& d) {
  int n = d.num_states();
  std::vector<int> number(n, -1), order;
  number[d.initial] = 0;
  order.push_back(d.initial);
  for (size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < d.nsym; ++a) {
      int t = d.next[order[i]][a];
      if (number[t] < 0) {
        number[t] = (int)order.size();
        order.push_back(t);
      }
    }
  Dfa out;
  out.nsym = d.nsym;
  out.initial = 0;
  out.next.assign(order.size(), std::vector<int>(d.nsym));
  out.accept.assign(order.size(), 0);
  for (size_t i = 0; i < order.size(); ++i) {
    out.accept[i] = d.accept[order[i]];
    for (int a = 0; a < d.nsym; ++a) out.next[i][a] = number[d.next[order[i]][a]];
  }
  return out;
}

std::string canonical_key(const Dfa& d) {
  Dfa c = minimize_dfa(d);
  std::ostringstream os;
  os << c.nsym << ';' << c.num_states() << ';';
  for (int s = 0; s < c.num_states(); ++s) {
    os << (c.accept[s] ? '1' : '0');
    for (int a = 0; a < c.nsym; ++a) os << ',' << c.next[s][a];
    os << ';';
  }
  return os.str();
}

bool same_language(const Dfa& a, const Dfa& b) {
  return canonical_key(a) == canonical_key(b);
}

bool language_empty(const Dfa& d) {
  return !shortest_accepted(d).has_value();
}

std::optional<std::vector<int>> shortest_accepted(const Dfa& d) {
  int n = d.num_states();
  std::vector<int> par(n, -2), via(n, -1);
  std::queue<int> q;
  par[d.initial] = -1;
  q.push(d.initial);
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    if (d.accept[s]) {
      std::vector<int> w;
      for (int cur = s; par[cur] != -1; cur = par[cur]) w.push_back(via[cur]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (int a = 0; a < d.nsym; ++a) {
      int t = d.next[s][a];
      if (par[t] == -2) {
        par[t] = s;
        via[t] = a;
        q.push(t);
      }
    }
  }
  return std::nullopt;
}

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode) {
  if (a.nsym != b.nsym) throw BadSymbol("product over mismatched alphabets");
  Dfa d;
  d.nsym = a.nsym;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](std::pair<int, int> p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    int id = (int)pairs.size();
    index.emplace(p, id);
    pairs.push_back(p);
    d.next.emplace_back(d.nsym, -1);
    bool acc = mode == ProductMode::And ? (a.accept[p.first] && b.accept[p.second])
                                        : (a.accept[p.first] && !b.accept[p.second]);
    d.accept.push_back(acc ? 1 : 0);
    return id;
  };
  d.initial = intern({a.initial, b.initial});
  for (int s = 0; s < (int)pairs.size(); ++s)
    for (int x = 0; x < d.nsym; ++x)
      d.next[s][x] = intern({a.next[pairs[s].first][x], b.next[pairs[s].second][x]});
  return d;
}

Nfa reverse_nfa(const Dfa& d) {
  Nfa n;
  n.nsym = d.nsym;
  int m = d.num_states();
  n.next.assign(m, std::vector<Bitset>(d.nsym, Bitset(m)));
  n.initial = Bitset(m);
  n.accept = Bitset(m);
  for (int s = 0; s < m; ++s) {
    if (d.accept[s]) n.initial.set(s);
    for (int a = 0; a < d.nsym; ++a) n.next[d.next[s][a]][a].set(s);
  }
  n.accept.set(d.initial);
  return n;
}

Dfa relabel_dfa(const Dfa& d, const std::vector<int>& tau) {
  Dfa out = d;
  for (int s = 0; s < d.num_states(); ++s)
    for (int a = 0; a < d.nsym; ++a) out.next[s][tau.at(a)] = d.next[s][a];
  return out;
}

Nfa forward_word_nfa(const LabeledGraph& g, const Bitset& starts) {
  Nfa n;
  n.nsym = g.num_symbols();
  int m = g.num_vertices();
  n.next.assign(m, std::vector<Bitset>(n.nsym, Bitset(m)));
  for (const auto& e : g.edges) n.next[e.src][e.sym].set(e.dst);
  n.initial = starts;
  n.accept = Bitset(m);
  for (int v = 0; v < m; ++v) n.accept.set(v);
  return n;
}

Nfa ending_word_nfa(const LabeledGraph& g, const Bitset& ends) {
  Nfa n;
  n.nsym = g.num_symbols();
  int m = g.num_vertices();
  n.next.assign(m, std::vector<Bitset>(n.nsym, Bitset(m)));
  for (const auto& e : g.edges) n.next[e.src][e.sym].set(e.dst);
  n.initial = full_vertex_set(g);
  n.accept = ends;
  return n;
}

Bitset full_vertex_set(const LabeledGraph& g) {
  Bitset s(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) s.set(v);
  return s;
}

Dfa forward_language_dfa(const LabeledGraph& g, const Bitset& starts) {
  return minimize_dfa(determinize(forward_word_nfa(g, starts)));
}

}  // namespace flipcount
