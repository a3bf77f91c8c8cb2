#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/graph.hpp"
#include "groupgraphs/spectrum.hpp"

namespace gg {

// ---------- components / distance ----------

inline std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.push_back({});
    std::deque<int> q{s};
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      out[id].push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) { comp[w] = id; q.push_back(w); }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) {
  return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

// Diameter; std::nullopt means infinite (disconnected graph).
inline std::optional<i64> diameter(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  i64 best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<i64> dist(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v))
        if (dist[w] < 0) { dist[w] = dist[v] + 1; q.push_back(w); }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

// ---------- parity / trees / pendants ----------

inline bool is_bipartite(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) { color[w] = color[v] ^ 1; q.push_back(w); }
        else if (color[w] == color[v]) return false;
      }
    }
  }
  return true;
}

inline bool is_tree(const SimpleGraph& g) {
  return g.vertex_count() > 0 && is_connected(g) &&
         g.edge_count() == g.vertex_count() - 1;
}

inline bool is_eulerian(const SimpleGraph& g) {
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

inline std::vector<int> pendant_vertices(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

// Bridges via DFS lowpoints (iterative to survive large graphs).
inline std::vector<Edge> cut_edges(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<Edge> bridges;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < g.neighbors(v).size()) {
        int w = g.neighbors(v)[idx++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.push_back({std::min(p, v), std::max(p, v)});
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

// Cyclomatic number m - n + 1; only meaningful for connected graphs.
inline std::optional<i64> cyclomatic_number(const SimpleGraph& g) {
  if (!is_connected(g)) return std::nullopt;
  return g.edge_count() - g.vertex_count() + 1;
}

inline std::vector<int> universal_vertices(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
  return out;
}

// ---------- vertex connectivity (Menger via max-flow) ----------

namespace detail {

// Dinic on a unit-capacity network; augmentation stops once `limit` is reached.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  i64 run(int s, int t, i64 limit) {
    i64 flow = 0;
    while (flow < limit && bfs(s, t)) {
      iter_ = head_;
      while (flow < limit) {
        i64 pushed = dfs(s, t, 1);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Arc { int to, next, cap; };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e = head_[v]; e >= 0; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[v] + 1;
          q.push_back(arcs_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  i64 dfs(int v, int t, i64 want) {
    if (v == t) return want;
    for (int& e = iter_[v]; e >= 0; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
        i64 got = dfs(a.to, t, std::min<i64>(want, a.cap));
        if (got > 0) {
          a.cap -= static_cast<int>(got);
          arcs_[e ^ 1].cap += static_cast<int>(got);
          return got;
        }
      }
    }
    level_[v] = -1;
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Max number of internally vertex-disjoint s-t paths (s,t nonadjacent),
// via the split-vertex reduction: v -> v_in, v_out with a unit internal arc.
inline i64 disjoint_path_count(const SimpleGraph& g, int s, int t, i64 limit) {
  int n = g.vertex_count();
  MaxFlow mf(2 * n);
  for (int v = 0; v < n; ++v) mf.add_arc(2 * v, 2 * v + 1, 1);  // in -> out
  for (auto [u, v] : g.edges()) {
    mf.add_arc(2 * u + 1, 2 * v, 1);
    mf.add_arc(2 * v + 1, 2 * u, 1);
  }
  return mf.run(2 * s + 1, 2 * t, limit);
}

// Groups vertices with identical closed neighborhoods (true twins). Twins are
// interchangeable by an automorphism, so one flow representative per class
// pair is enough.
inline std::vector<int> twin_class_representatives(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::map<std::vector<int>, int> classes;
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    std::vector<int> closed = g.neighbors(v);
    closed.push_back(v);
    std::sort(closed.begin(), closed.end());
    if (classes.emplace(std::move(closed), v).second) reps.push_back(v);
  }
  return reps;
}

inline i64 kappa_impl(const SimpleGraph& g, i64 stop_at) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  auto comps = connected_components(g);
  if (comps.size() > 1) return 0;

  // Universal vertices sit in every cut: kappa(G) = u + kappa(G - U).
  std::vector<int> uni = universal_vertices(g);
  if (!uni.empty()) {
    std::vector<int> rest;
    std::set<int> uset(uni.begin(), uni.end());
    for (int v = 0; v < n; ++v)
      if (!uset.count(v)) rest.push_back(v);
    i64 sub = kappa_impl(induced_subgraph(g, rest),
                         std::max<i64>(0, stop_at - static_cast<i64>(uni.size())));
    return static_cast<i64>(uni.size()) + sub;
  }

  i64 best = n - 1;
  std::vector<int> reps = twin_class_representatives(g);
  for (size_t i = 0; i < reps.size() && best > 0; ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) {
      int s = reps[i], t = reps[j];
      if (g.has_edge(s, t)) continue;
      i64 flow = disjoint_path_count(g, s, t, std::min(best, stop_at));
      best = std::min(best, flow);
      if (best <= 0) break;
    }
  return best;
}

}  // namespace detail

// Exact vertex connectivity. Complete graphs yield n-1 (no nonadjacent pair
// exists to cut); otherwise the minimum over nonadjacent pairs of the Menger
// max-flow value.
inline i64 vertex_connectivity(const SimpleGraph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("vertex connectivity needs at least 2 vertices");
  return detail::kappa_impl(g, g.vertex_count());
}

// Decides kappa(g) >= k without computing the exact value (flows stop early).
inline bool vertex_connectivity_at_least(const SimpleGraph& g, i64 k) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("vertex connectivity needs at least 2 vertices");
  if (k <= 0) return true;
  return detail::kappa_impl(g, k) >= k;
}

// ---------- exact clique / independence / chromatic ----------

constexpr int kDefaultExactCap = 64;

struct ExactCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Branch and bound maximum clique with a greedy-coloring upper bound.
class CliqueSolver {
 public:
  explicit CliqueSolver(const SimpleGraph& g) : n_(g.vertex_count()), adj_(n_) {
    for (int v = 0; v < n_; ++v) {
      adj_[v].assign(n_, 0);
      for (int w : g.neighbors(v)) adj_[v][w] = 1;
    }
  }

  int solve() {
    std::vector<int> cand(n_);
    for (int i = 0; i < n_; ++i) cand[i] = i;
    best_ = 0;
    expand(cand, 0);
    return best_;
  }

 private:
  void expand(std::vector<int>& cand, int size) {
    if (cand.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    // greedy coloring bound: vertices ordered by color class
    std::vector<int> color(cand.size());
    int ncolors = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
      int c = 0;
      while (c < ncolors) {
        bool clash = false;
        for (size_t j = 0; j < i; ++j)
          if (color[j] == c && adj_[cand[i]][cand[j]]) { clash = true; break; }
        if (!clash) break;
        ++c;
      }
      if (c == ncolors) ++ncolors;
      color[i] = c;
    }
    std::vector<size_t> order(cand.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return color[a] < color[b]; });
    // branch from highest color downwards
    for (size_t oi = order.size(); oi-- > 0;) {
      size_t i = order[oi];
      if (size + color[i] + 1 <= best_) return;
      int v = cand[i];
      std::vector<int> next;
      for (size_t j = 0; j < oi; ++j) {
        int w = cand[order[j]];
        if (adj_[v][w]) next.push_back(w);
      }
      expand(next, size + 1);
    }
    best_ = std::max(best_, size);
  }

  int n_;
  std::vector<std::vector<char>> adj_;
  int best_ = 0;
};

inline std::vector<int> greedy_max_clique_vertices(const SimpleGraph& g) {
  // a maximal clique used to seed the chromatic search
  int n = g.vertex_count();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int c : clique)
      if (!g.has_edge(v, c)) { ok = false; break; }
    if (ok) clique.push_back(v);
  }
  return clique;
}

// Exact k-colorability by saturation-guided backtracking.
class ColorSolver {
 public:
  ColorSolver(const SimpleGraph& g, int k) : g_(g), k_(k), color_(g.vertex_count(), -1) {}

  bool solve(const std::vector<int>& seed_clique) {
    int c = 0;
    for (int v : seed_clique) {
      if (c >= k_) return false;
      color_[v] = c++;
    }
    return rec();
  }

 private:
  bool rec() {
    int pick = -1, best_sat = -1, best_deg = -1;
    int n = g_.vertex_count();
    for (int v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      std::set<int> sat;
      for (int w : g_.neighbors(v))
        if (color_[w] >= 0) sat.insert(color_[w]);
      int deg = g_.degree(v);
      if (static_cast<int>(sat.size()) > best_sat ||
          (static_cast<int>(sat.size()) == best_sat && deg > best_deg)) {
        best_sat = static_cast<int>(sat.size());
        best_deg = deg;
        pick = v;
      }
    }
    if (pick < 0) return true;
    std::vector<char> banned(k_, 0);
    for (int w : g_.neighbors(pick))
      if (color_[w] >= 0) banned[color_[w]] = 1;
    int used_max = -1;
    for (int v = 0; v < g_.vertex_count(); ++v) used_max = std::max(used_max, color_[v]);
    for (int c = 0; c < k_ && c <= used_max + 1; ++c) {
      if (banned[c]) continue;
      color_[pick] = c;
      if (rec()) return true;
      color_[pick] = -1;
    }
    return false;
  }

  const SimpleGraph& g_;
  int k_;
  std::vector<int> color_;
};

}  // namespace detail

inline int clique_number(const SimpleGraph& g, int cap = kDefaultExactCap) {
  if (g.vertex_count() > cap)
    throw ExactCapExceeded("clique number: graph exceeds exact-solver cap " +
                           std::to_string(cap));
  if (g.vertex_count() == 0) return 0;
  return detail::CliqueSolver(g).solve();
}

inline int independence_number(const SimpleGraph& g, int cap = kDefaultExactCap) {
  if (g.vertex_count() > cap)
    throw ExactCapExceeded("independence number: graph exceeds exact-solver cap " +
                           std::to_string(cap));
  if (g.vertex_count() == 0) return 0;
  return detail::CliqueSolver(complement(g)).solve();
}

inline int chromatic_number(const SimpleGraph& g, int cap = kDefaultExactCap) {
  if (g.vertex_count() > cap)
    throw ExactCapExceeded("chromatic number: graph exceeds exact-solver cap " +
                           std::to_string(cap));
  if (g.vertex_count() == 0) return 0;
  int lower = detail::CliqueSolver(g).solve();
  std::vector<int> seed = detail::greedy_max_clique_vertices(g);
  for (int k = lower; k <= g.vertex_count(); ++k) {
    if (detail::ColorSolver(g, k).solve(seed)) return k;
  }
  return g.vertex_count();
}

// ---- quotient shortcuts: alpha and omega of an order supergraph straight
// from the spectrum (independent sets pick at most one vertex per order class;
// cliques are divisibility chains weighted by class sizes) ----

inline int supergraph_alpha(const OrderSpectrum& sp) {
  std::vector<i64> sup = sp.support();
  int n = static_cast<int>(sup.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (orders_comparable(sup[i], sup[j])) es.push_back({i, j});
  SimpleGraph og(n, std::move(es));
  return independence_number(og, std::max(kDefaultExactCap, n));
}

inline BigInt supergraph_omega(const OrderSpectrum& sp) {
  std::vector<i64> sup = sp.support();  // ascending
  int n = static_cast<int>(sup.size());
  std::vector<BigInt> best(n);
  BigInt overall = 0;
  for (int i = 0; i < n; ++i) {
    best[i] = sp.count(sup[i]);
    BigInt prev = 0;
    for (int j = 0; j < i; ++j)
      if (sup[i] % sup[j] == 0) prev = std::max(prev, best[j]);
    best[i] += prev;
    overall = std::max(overall, best[i]);
  }
  return overall;
}

// ---------- planarity (prefilter + Demoucron face augmentation) ----------

namespace detail {

inline bool comp_has(const std::vector<int>& comp, int v) {
  return std::find(comp.begin(), comp.end(), v) != comp.end();
}

// Demoucron's algorithm; g must be biconnected with >= 3 vertices.
inline bool demoucron_biconnected(const SimpleGraph& g) {
  int n = g.vertex_count();
  i64 m = g.edge_count();
  if (m > 3 * static_cast<i64>(n) - 6) return false;

  // initial cycle: BFS tree plus any non-tree edge, closed through the LCA
  std::vector<int> cyc;
  {
    std::vector<int> par(n, -1), depth(n, -1);
    std::deque<int> q{0};
    depth[0] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v))
        if (depth[w] < 0) { depth[w] = depth[v] + 1; par[w] = v; q.push_back(w); }
    }
    int eu = -1, ev = -1;
    for (auto [u, v] : g.edges())
      if (par[u] != v && par[v] != u) { eu = u; ev = v; break; }
    if (eu < 0) return true;  // forest
    std::vector<int> pu{eu}, pv{ev};
    int x = eu, y = ev;
    while (x != y) {
      if (depth[x] >= depth[y]) { x = par[x]; pu.push_back(x); }
      else { y = par[y]; pv.push_back(y); }
    }
    cyc = pu;  // eu .. lca
    for (size_t i = pv.size() - 1; i-- > 0;) cyc.push_back(pv[i]);  // .. back to ev
  }

  std::vector<char> in_h(n, 0);
  std::set<Edge> h_edges;
  auto add_h_edge = [&](int a, int b) { h_edges.insert({std::min(a, b), std::max(a, b)}); };
  for (size_t i = 0; i < cyc.size(); ++i) {
    in_h[cyc[i]] = 1;
    add_h_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  std::vector<std::vector<int>> faces{cyc, cyc};

  struct Fragment {
    std::vector<int> attachments;       // H-vertices touching the fragment
    std::vector<int> interior;          // non-H component (empty for chords)
    Edge chord{-1, -1};
  };

  while (static_cast<i64>(h_edges.size()) < m) {
    // fragments: chords between H-vertices, and components of G - H
    std::vector<Fragment> frags;
    for (auto [u, v] : g.edges())
      if (in_h[u] && in_h[v] && !h_edges.count({u, v})) {
        Fragment f;
        f.attachments = {u, v};
        f.chord = {u, v};
        frags.push_back(std::move(f));
      }
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
      if (in_h[s] || comp[s] >= 0) continue;
      Fragment f;
      std::set<int> attach;
      std::deque<int> q{s};
      comp[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        f.interior.push_back(v);
        for (int w : g.neighbors(v)) {
          if (in_h[w]) attach.insert(w);
          else if (comp[w] < 0) { comp[w] = 1; q.push_back(w); }
        }
      }
      f.attachments.assign(attach.begin(), attach.end());
      frags.push_back(std::move(f));
    }
    if (frags.empty()) break;  // remaining edges already embedded

    // admissible faces per fragment
    int pick = -1;
    std::vector<int> pick_faces;
    for (size_t fi = 0; fi < frags.size(); ++fi) {
      std::vector<int> adm;
      for (size_t k = 0; k < faces.size(); ++k) {
        std::set<int> fv(faces[k].begin(), faces[k].end());
        bool ok = true;
        for (int a : frags[fi].attachments)
          if (!fv.count(a)) { ok = false; break; }
        if (ok) adm.push_back(static_cast<int>(k));
      }
      if (adm.empty()) return false;
      if (pick < 0 || adm.size() < pick_faces.size()) {
        pick = static_cast<int>(fi);
        pick_faces = adm;
        if (adm.size() == 1) break;
      }
    }

    Fragment& f = frags[pick];
    if (f.attachments.size() < 2)
      throw std::logic_error("planarity: fragment with fewer than 2 attachments in a biconnected graph");

    // choose a path between two attachments through the fragment
    std::vector<int> path;
    if (f.interior.empty()) {
      path = {f.chord.first, f.chord.second};
    } else {
      int a = f.attachments[0];
      std::vector<int> prev(n, -2);
      std::deque<int> q;
      for (int w : g.neighbors(a))
        if (!in_h[w] && comp_has(f.interior, w) && prev[w] == -2) { prev[w] = a; q.push_back(w); }
      int hit = -1;
      while (!q.empty() && hit < 0) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
          if (in_h[w] && w != a) { hit = w; prev[w] = v; break; }
          if (!in_h[w] && prev[w] == -2) { prev[w] = v; q.push_back(w); }
        }
      }
      if (hit < 0) throw std::logic_error("planarity: fragment path search failed");
      for (int x = hit; x != a; x = prev[x]) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    // embed `path` into the chosen face, splitting it in two
    const std::vector<int>& face = faces[pick_faces[0]];
    int a = path.front(), b = path.back();
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i < face.size(); ++i) {
      if (face[i] == a) ia = i;
      if (face[i] == b) ib = i;
    }
    std::vector<int> seg1, seg2;
    for (size_t i = ia; ; i = (i + 1) % face.size()) {
      seg1.push_back(face[i]);
      if (i == ib) break;
    }
    for (size_t i = ib; ; i = (i + 1) % face.size()) {
      seg2.push_back(face[i]);
      if (i == ia) break;
    }
    std::vector<int> inner(path.begin() + 1, path.end() - 1);
    std::vector<int> face1 = seg1;  // a..b then path interior reversed b->a
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) face1.push_back(*it);
    std::vector<int> face2 = seg2;  // b..a then path interior a->b
    for (int x : inner) face2.push_back(x);

    faces[pick_faces[0]] = face1;
    faces.push_back(face2);
    for (int x : path) in_h[x] = 1;
    for (size_t i = 0; i + 1 < path.size(); ++i) add_h_edge(path[i], path[i + 1]);
  }
  return true;
}

// Biconnected components as edge lists (iterative Hopcroft-Tarjan).
inline std::vector<std::vector<Edge>> biconnected_components(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<Edge> estack;
  std::vector<std::vector<Edge>> comps;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < g.neighbors(v).size()) {
        int w = g.neighbors(v)[idx++];
        if (disc[w] < 0) {
          estack.push_back({v, w});
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            std::vector<Edge> comp;
            while (!estack.empty()) {
              Edge e = estack.back();
              estack.pop_back();
              comp.push_back(e);
              if ((e.first == p && e.second == v) || (e.first == v && e.second == p)) break;
            }
            if (!comp.empty()) comps.push_back(std::move(comp));
          }
        }
      }
    }
  }
  return comps;
}

}  // namespace detail

// Exact planarity: the edge-count prefilter, then Demoucron's face
// augmentation on each biconnected component.
inline bool is_planar(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n >= 3 && g.edge_count() > 3 * static_cast<i64>(n) - 6) return false;
  for (const auto& comp_edges : detail::biconnected_components(g)) {
    if (comp_edges.size() <= 2) continue;
    std::set<int> verts;
    for (auto [u, v] : comp_edges) { verts.insert(u); verts.insert(v); }
    std::vector<int> vs(verts.begin(), verts.end());
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : comp_edges)
      es.push_back({std::min(pos[u], pos[v]), std::max(pos[u], pos[v])});
    SimpleGraph sub(static_cast<int>(vs.size()), std::move(es));
    if (!detail::demoucron_biconnected(sub)) return false;
  }
  return true;
}

// ---------- perfectness (odd holes in graph and complement) ----------

constexpr int kDefaultPerfectCap = 40;

namespace detail {

// Looks for an induced cycle of odd length >= 5. DFS over induced paths whose
// minimum vertex is the start.
inline bool has_odd_hole(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> in_path(n, 0);

  std::function<bool(int)> dfs = [&](int s) -> bool {
    int last = path.back();
    for (int w : g.neighbors(last)) {
      if (w <= s || in_path[w]) continue;
      bool chord = false, adj_s = false;
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.has_edge(w, path[i])) {
          if (i == 0) adj_s = true;
          else { chord = true; break; }
        }
      }
      if (chord) continue;
      if (adj_s) {
        // w closes a cycle; a vertex adjacent to s can only ever be the
        // closing vertex, so no extension through it
        size_t cyc_len = path.size() + 1;
        if (cyc_len >= 5 && cyc_len % 2 == 1) return true;
        continue;
      }
      path.push_back(w);
      in_path[w] = 1;
      bool found = dfs(s);
      in_path[w] = 0;
      path.pop_back();
      if (found) return true;
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(in_path.begin(), in_path.end(), 0);
    in_path[s] = 1;
    if (dfs(s)) return true;
  }
  return false;
}

}  // namespace detail

// Strong-perfect-graph criterion: no induced odd cycle of length >= 5 in the
// graph or its complement.
inline bool is_perfect(const SimpleGraph& g, int cap = kDefaultPerfectCap) {
  if (g.vertex_count() > cap)
    throw ExactCapExceeded("perfectness: graph exceeds search cap " + std::to_string(cap));
  return !detail::has_odd_hole(g) && !detail::has_odd_hole(complement(g));
}

}  // namespace gg
