#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "groupgraphs/numtheory.hpp"

namespace gg {

using Edge = std::pair<int, int>;  // stored with first < second

// Undirected loop-free graph on vertices 0..n-1. Edges are kept as a sorted
// pair set for reproducible iteration; adjacency lists are derived from it.
// Vertices may carry integer labels (element orders in this project).
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(int n, std::vector<Edge> edges = {}, std::vector<i64> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
      throw std::invalid_argument("label vector size mismatch");
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("loops are not allowed");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int vertex_count() const { return n_; }
  i64 edge_count() const { return static_cast<i64>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<i64>& labels() const { return labels_; }
  i64 label(int v) const { return labels_.empty() ? v : labels_[v]; }

  bool is_complete() const {
    return edge_count() == static_cast<i64>(n_) * (n_ - 1) / 2;
  }

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<i64> labels_;
};

// Directed graph, no self-arcs.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(int n, std::vector<Edge> arcs = {}) : n_(n) {
    for (auto [u, v] : arcs) {
      if (u == v) throw std::invalid_argument("self-arcs are not allowed");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("arc endpoint out of range");
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);
  }

  int vertex_count() const { return n_; }
  i64 arc_count() const { return static_cast<i64>(arcs_.size()); }
  const std::vector<Edge>& arcs() const { return arcs_; }

  i64 out_degree(int v) const {
    i64 c = 0;
    for (auto [a, b] : arcs_) c += (a == v);
    return c;
  }
  i64 in_degree(int v) const {
    i64 c = 0;
    for (auto [a, b] : arcs_) c += (b == v);
    return c;
  }

  // Forgetting directions must recover the undirected graph.
  SimpleGraph underlying_undirected() const {
    std::vector<Edge> es;
    es.reserve(arcs_.size());
    for (auto [u, v] : arcs_) es.push_back(u < v ? Edge{u, v} : Edge{v, u});
    return SimpleGraph(n_, std::move(es));
  }

 private:
  int n_ = 0;
  std::vector<Edge> arcs_;
};

// Partition of 0..n-1 into disjoint nonempty blocks.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  void validate(int n) const {
    std::vector<char> seen(n, false);
    int total = 0;
    for (const auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("partition block is empty");
      for (int v : b) {
        if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
        if (seen[v]) throw std::invalid_argument("partition blocks are not disjoint");
        seen[v] = true;
        ++total;
      }
    }
    if (total != n) throw std::invalid_argument("partition does not cover all vertices");
  }
};

inline SimpleGraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return SimpleGraph(n, std::move(es));
}

inline SimpleGraph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) es.push_back({u, (u + 1) % n});
  return SimpleGraph(n, std::move(es));
}

inline SimpleGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u + 1 < n; ++u) es.push_back({u, u + 1});
  return SimpleGraph(n, std::move(es));
}

inline SimpleGraph complement(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) es.push_back({u, v});
  std::vector<i64> labels = g.labels();
  return SimpleGraph(n, std::move(es), std::move(labels));
}

// Induced subgraph on the given vertices, reindexed in ascending vertex order.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> pos(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced subgraph: vertex out of range");
    pos[v] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) es.push_back({pos[u], pos[v]});
  std::vector<i64> labels;
  if (g.has_labels())
    for (int v : verts) labels.push_back(g.label(v));
  return SimpleGraph(static_cast<int>(verts.size()), std::move(es), std::move(labels));
}

// Removes vertex 0 (the identity in group graphs) and reindexes.
inline SimpleGraph proper_graph(const SimpleGraph& g) {
  std::vector<int> rest;
  for (int v = 1; v < g.vertex_count(); ++v) rest.push_back(v);
  return induced_subgraph(g, rest);
}

// Blocks become vertices; two blocks are adjacent iff some cross edge exists.
// Block labels: the label of the block's first vertex (order classes share it).
inline SimpleGraph quotient_graph(const SimpleGraph& g, const VertexPartition& part) {
  part.validate(g.vertex_count());
  std::vector<int> block_of(g.vertex_count());
  for (size_t b = 0; b < part.blocks.size(); ++b)
    for (int v : part.blocks[b]) block_of[v] = static_cast<int>(b);
  std::set<Edge> es;
  for (auto [u, v] : g.edges()) {
    int bu = block_of[u], bv = block_of[v];
    if (bu != bv) es.insert({std::min(bu, bv), std::max(bu, bv)});
  }
  std::vector<i64> labels;
  if (g.has_labels())
    for (const auto& b : part.blocks) labels.push_back(g.label(b.front()));
  return SimpleGraph(static_cast<int>(part.blocks.size()),
                     std::vector<Edge>(es.begin(), es.end()), std::move(labels));
}

// Sabidussi A-join: replace vertex i of the template by parts[i], adding all
// edges between two parts whose template vertices are adjacent.
inline SimpleGraph a_join(const SimpleGraph& a, const std::vector<SimpleGraph>& parts) {
  if (static_cast<int>(parts.size()) != a.vertex_count())
    throw std::invalid_argument("a_join: one part per template vertex required");
  std::vector<int> offset(parts.size() + 1, 0);
  for (size_t i = 0; i < parts.size(); ++i)
    offset[i + 1] = offset[i] + parts[i].vertex_count();
  std::vector<Edge> es;
  std::vector<i64> labels;
  bool any_labels = false;
  for (const auto& p : parts) any_labels = any_labels || p.has_labels();
  for (size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i].edges()) es.push_back({offset[i] + u, offset[i] + v});
    if (any_labels)
      for (int v = 0; v < parts[i].vertex_count(); ++v)
        labels.push_back(parts[i].label(v));
  }
  for (auto [i, j] : a.edges())
    for (int u = 0; u < parts[i].vertex_count(); ++u)
      for (int v = 0; v < parts[j].vertex_count(); ++v)
        es.push_back({offset[i] + u, offset[j] + v});
  return SimpleGraph(offset.back(), std::move(es), std::move(labels));
}

// Glues two graphs by identifying vertex u of g with vertex v of h.
// Result vertices: all of g, then h minus v (shifted), with u as the joint.
inline SimpleGraph splice(const SimpleGraph& g, const SimpleGraph& h, int u, int v) {
  if (u < 0 || u >= g.vertex_count()) throw std::out_of_range("splice: u out of range");
  if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("splice: v out of range");
  int n = g.vertex_count() + h.vertex_count() - 1;
  auto map_h = [&](int w) {
    if (w == v) return u;
    int shifted = w < v ? w : w - 1;
    return g.vertex_count() + shifted;
  };
  std::vector<Edge> es = g.edges();
  for (auto [a, b] : h.edges()) es.push_back({map_h(a), map_h(b)});
  std::vector<i64> labels;
  if (g.has_labels() && h.has_labels()) {
    labels = g.labels();
    for (int w = 0; w < h.vertex_count(); ++w)
      if (w != v) labels.push_back(h.label(w));
  }
  return SimpleGraph(n, std::move(es), std::move(labels));
}

// ---- deterministic exports ----

inline nlohmann::ordered_json graph_to_json(const SimpleGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  j["edges"] = std::move(es);
  if (g.has_labels()) {
    nlohmann::ordered_json ls = nlohmann::ordered_json::array();
    for (i64 l : g.labels()) ls.push_back(l);
    j["labels"] = std::move(ls);
  }
  return j;
}

// DOT with vertex label = element order; vertices of order 1 double-circled.
inline std::string graph_to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (g.has_labels()) {
      out += " [label=\"" + std::to_string(g.label(v)) + "\"";
      if (g.label(v) == 1) out += ", peripheries=2";
      out += "]";
    }
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace gg
