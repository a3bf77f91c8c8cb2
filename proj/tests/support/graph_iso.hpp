#pragma once

// Unlabeled graph isomorphism for tiny graphs (<= 12 vertices), by
// backtracking over degree-compatible vertex images. Test-suite utility only.

#include <algorithm>
#include <functional>
#include <vector>

#include "groupgraphs/graph.hpp"

namespace testutil {

inline bool graphs_isomorphic(const gg::SimpleGraph& a, const gg::SimpleGraph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n > 12) throw std::invalid_argument("graphs_isomorphic: limited to 12 vertices");
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) { da[v] = a.degree(v); db[v] = b.degree(v); }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace testutil
