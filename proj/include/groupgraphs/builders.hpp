#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "groupgraphs/graph.hpp"
#include "groupgraphs/group.hpp"
#include "groupgraphs/spectrum.hpp"

namespace gg {

// Power graph: x ~ y iff one lies in the cyclic subgroup generated by the other.
// Vertex labels carry element orders.
inline SimpleGraph power_graph(const FiniteGroup& g) {
  int n = g.size();
  std::vector<Edge> es;
  std::vector<std::vector<char>> in_cyc(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) {
    int acc = x;
    while (acc != 0) { in_cyc[x][acc] = 1; acc = g.multiply(acc, x); }
    in_cyc[x][0] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (in_cyc[x][y] || in_cyc[y][x]) es.push_back({x, y});
  return SimpleGraph(n, std::move(es), g.orders());
}

// Order supergraph: x ~ y iff o(x) | o(y) or o(y) | o(x).
inline SimpleGraph order_supergraph(const FiniteGroup& g) {
  int n = g.size();
  std::vector<Edge> es;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (orders_comparable(g.order_of(x), g.order_of(y))) es.push_back({x, y});
  return SimpleGraph(n, std::move(es), g.orders());
}

// Arc (x, g) present iff x != g and o(g) | o(x).
inline DirectedGraph directed_order_supergraph(const FiniteGroup& g) {
  int n = g.size();
  std::vector<Edge> arcs;
  for (int x = 0; x < n; ++x)
    for (int t = 0; t < n; ++t)
      if (x != t && divides(g.order_of(t), g.order_of(x))) arcs.push_back({x, t});
  return DirectedGraph(n, std::move(arcs));
}

// Order graph on a spectrum's support (ascending), divisibility adjacency.
inline SimpleGraph order_graph_of(const OrderSpectrum& sp) {
  std::vector<i64> sup = sp.support();
  int n = static_cast<int>(sup.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (orders_comparable(sup[i], sup[j])) es.push_back({i, j});
  return SimpleGraph(n, std::move(es), sup);
}

inline SimpleGraph order_graph(const GroupSpec& s, i64 cap = kDefaultRealizeCap) {
  return order_graph_of(spectrum_of(s, cap));
}

// Prime graph (Gruenberg-Kegel): vertices pi(G), p ~ q iff pq divides some
// element order.
inline SimpleGraph prime_graph_of(const OrderSpectrum& sp) {
  auto pset = prime_set_of(sp);
  std::vector<i64> primes(pset.begin(), pset.end());
  auto sup = sp.support();
  int n = static_cast<int>(primes.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      i64 pq = primes[i] * primes[j];
      for (i64 d : sup)
        if (d % pq == 0) { es.push_back({i, j}); break; }
    }
  return SimpleGraph(n, std::move(es), primes);
}

inline SimpleGraph prime_graph(const GroupSpec& s, i64 cap = kDefaultRealizeCap) {
  return prime_graph_of(spectrum_of(s, cap));
}

// Builds a graph isomorphic to the order supergraph without the group: the
// divisibility graph on the support, each order-d vertex blown up to a clique
// of size omega_d. Vertex blocks are ordered by increasing d.
inline SimpleGraph supergraph_from_spectrum(const OrderSpectrum& sp, i64 vertex_cap = kDefaultRealizeCap) {
  if (sp.group_size > vertex_cap)
    throw CapExceeded("materializing " + to_decimal(sp.group_size) +
                      " vertices exceeds cap " + std::to_string(vertex_cap) +
                      " (the order-graph quotient form is still available)");
  SimpleGraph templ = order_graph_of(sp);
  std::vector<SimpleGraph> parts;
  for (int i = 0; i < templ.vertex_count(); ++i) {
    i64 d = templ.label(i);
    int size = static_cast<int>(sp.count(d));
    SimpleGraph clique = complete_graph(size);
    parts.push_back(SimpleGraph(size, clique.edges(), std::vector<i64>(size, d)));
  }
  return a_join(templ, parts);
}

// Stable relabeling that sorts vertices by (label, index); adjacency that
// depends only on labels is preserved, which makes spectrum-built and
// group-built supergraphs directly comparable.
inline SimpleGraph sort_vertices_by_label(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return g.label(a) < g.label(b); });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    int a = pos[u], b = pos[v];
    es.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<i64> labels;
  if (g.has_labels())
    for (int i = 0; i < n; ++i) labels.push_back(g.label(perm[i]));
  return SimpleGraph(n, std::move(es), std::move(labels));
}

// Equal-order classes of a group graph, ascending by order; quotienting the
// order supergraph by this partition gives the order graph.
inline VertexPartition order_class_partition(const FiniteGroup& g) {
  std::map<i64, std::vector<int>> classes;
  for (int v = 0; v < g.size(); ++v) classes[g.order_of(v)].push_back(v);
  VertexPartition part;
  for (auto& [d, block] : classes) part.blocks.push_back(std::move(block));
  return part;
}

}  // namespace gg
