#pragma once

// Independent brute-force oracles for the test suite. Everything here is
// deliberately naive and kept apart from the library implementations.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "groupgraphs/graph.hpp"
#include "groupgraphs/numtheory.hpp"
#include "groupgraphs/perm.hpp"

namespace oracle {

using gg::Edge;
using gg::i64;
using gg::SimpleGraph;

inline i64 totient_by_gcd_count(i64 n) {
  i64 c = 0;
  for (i64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

inline i64 perm_order_by_cycle_type(const gg::Perm& p) {
  i64 o = 1;
  for (int len : gg::cycle_type(p)) o = std::lcm<i64>(o, len);
  return o;
}

// Largest independent set / clique by subset enumeration (n <= ~20).
inline int alpha_brute(const SimpleGraph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if (mask >> u & 1)
        for (int v = u + 1; v < n; ++v)
          if ((mask >> v & 1) && g.has_edge(u, v)) { ok = false; break; }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline int omega_brute(const SimpleGraph& g) { return alpha_brute(gg::complement(g)); }

inline int chi_brute(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> rec = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) { ok = false; break; }
      if (!ok) continue;
      color[v] = c;
      if (rec(v + 1, k)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int k = 1; k <= n; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (rec(0, k)) return k;
  }
  return n;
}

inline bool connected_after_removal(const SimpleGraph& g, const std::set<int>& removed) {
  int n = g.vertex_count();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!removed.count(v)) { start = v; break; }
  if (start < 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!removed.count(w) && !seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
  }
  return cnt == n - static_cast<int>(removed.size());
}

// Vertex connectivity by direct subset search (n <= ~9).
inline i64 kappa_brute(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (g.is_complete()) return n - 1;
  for (int k = 0; k <= n - 2; ++k) {
    std::vector<int> pick(k);
    std::function<bool(int, int)> choose = [&](int idx, int from) {
      if (idx == k) {
        std::set<int> rem(pick.begin(), pick.end());
        return !connected_after_removal(g, rem) ||
               g.vertex_count() - k <= 1;
      }
      for (int v = from; v < n; ++v) {
        pick[idx] = v;
        if (choose(idx + 1, v + 1)) return true;
      }
      return false;
    };
    if (choose(0, 0)) return k;
  }
  return n - 1;
}

// Perfectness by the chi = omega definition over every induced subgraph
// (n <= ~9).
inline bool perfect_brute(const SimpleGraph& g) {
  int n = g.vertex_count();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    SimpleGraph sub = gg::induced_subgraph(g, verts);
    if (chi_brute(sub) != omega_brute(sub)) return false;
  }
  return true;
}

// ---- exhaustive Kuratowski subdivision search (n <= ~10) ----

namespace detail {

struct SubdivisionSearch {
  const SimpleGraph& g;
  std::vector<char> used;                // interior vertices already claimed
  std::vector<int> branch;

  explicit SubdivisionSearch(const SimpleGraph& gr) : g(gr), used(gr.vertex_count(), 0) {}

  // enumerate simple paths a..b whose interiors are unused non-branch vertices
  bool connect(const std::vector<Edge>& pairs, size_t idx) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];
    std::vector<int> path;  // interior vertices only
    std::function<bool(int)> extend = [&](int v) -> bool {
      for (int w : g.neighbors(v)) {
        if (w == b) {
          for (int x : path) used[x] = 1;
          bool done = connect(pairs, idx + 1);
          for (int x : path) used[x] = 0;
          if (done) return true;
          continue;
        }
        if (used[w]) continue;
        if (std::find(branch.begin(), branch.end(), w) != branch.end()) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        path.push_back(w);
        if (extend(w)) return true;
        path.pop_back();
      }
      return false;
    };
    return extend(a);
  }
};

}  // namespace detail

// True iff g contains a subdivision of K5 or of K_{3,3}.
inline bool has_kuratowski_subdivision(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);

  // K5: five branch vertices of degree >= 4, ten disjoint paths
  {
    std::vector<int> pick;
    std::function<bool(int)> choose = [&](int from) -> bool {
      if (pick.size() == 5) {
        detail::SubdivisionSearch s(g);
        s.branch = pick;
        std::vector<Edge> pairs;
        for (size_t i = 0; i < 5; ++i)
          for (size_t j = i + 1; j < 5; ++j) pairs.push_back({pick[i], pick[j]});
        return s.connect(pairs, 0);
      }
      for (int v = from; v < n; ++v) {
        if (g.degree(v) < 4) continue;
        pick.push_back(v);
        if (choose(v + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (choose(0)) return true;
  }

  // K_{3,3}: 3+3 branch vertices of degree >= 3, nine disjoint paths
  {
    std::vector<int> left, right;
    std::function<bool(int)> choose_right = [&](int from) -> bool {
      if (right.size() == 3) {
        detail::SubdivisionSearch s(g);
        s.branch = left;
        s.branch.insert(s.branch.end(), right.begin(), right.end());
        std::vector<Edge> pairs;
        for (int a : left)
          for (int b : right) pairs.push_back({a, b});
        return s.connect(pairs, 0);
      }
      for (int v = from; v < n; ++v) {
        if (g.degree(v) < 3) continue;
        if (std::find(left.begin(), left.end(), v) != left.end()) continue;
        right.push_back(v);
        if (choose_right(v + 1)) return true;
        right.pop_back();
      }
      return false;
    };
    std::function<bool(int)> choose_left = [&](int from) -> bool {
      if (left.size() == 3) return choose_right(0);
      for (int v = from; v < n; ++v) {
        if (g.degree(v) < 3) continue;
        left.push_back(v);
        if (choose_left(v + 1)) return true;
        left.pop_back();
      }
      return false;
    };
    if (choose_left(0)) return true;
  }
  return false;
}

// Deterministic pseudo-random graphs for property tests.
inline SimpleGraph random_graph(int n, int edge_percent, unsigned seed) {
  unsigned state = seed * 2654435761u + 1013904223u;
  auto next = [&]() {
    state = state * 1664525u + 1013904223u;
    return (state >> 16) % 100;
  };
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(next()) < edge_percent) es.push_back({u, v});
  return SimpleGraph(n, std::move(es));
}

}  // namespace oracle
