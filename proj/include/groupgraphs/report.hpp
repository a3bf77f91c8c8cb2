#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "groupgraphs/graph.hpp"
#include "groupgraphs/invariants.hpp"

namespace gg {

// Full structural report for one graph. NP-hard fields respect caps and stay
// unset when skipped; consumers can tell skipped from undefined via `skipped`.
struct GraphReport {
  int components = 0;
  std::optional<i64> diameter;          // nullopt = infinite
  std::optional<i64> kappa;             // unset for single-vertex graphs
  std::optional<int> alpha, omega, chi; // unset when over the exact cap
  bool planar = false;
  bool bipartite = false;
  bool tree = false;
  bool eulerian = false;
  std::optional<bool> perfect;          // unset when over the perfectness cap
  std::optional<i64> cyclomatic;        // unset when disconnected
  std::vector<int> pendant;
  std::vector<Edge> bridges;
  std::vector<std::string> skipped;     // cap-skipped field names
};

inline GraphReport analyze_graph(const SimpleGraph& g,
                                 int exact_cap = kDefaultExactCap,
                                 int perfect_cap = kDefaultPerfectCap) {
  GraphReport r;
  r.components = static_cast<int>(connected_components(g).size());
  r.diameter = diameter(g);
  if (g.vertex_count() >= 2) r.kappa = vertex_connectivity(g);
  if (g.vertex_count() <= exact_cap) {
    r.alpha = independence_number(g, exact_cap);
    r.omega = clique_number(g, exact_cap);
    r.chi = chromatic_number(g, exact_cap);
  } else {
    r.skipped.insert(r.skipped.end(), {"alpha", "omega", "chi"});
  }
  r.planar = is_planar(g);
  r.bipartite = is_bipartite(g);
  r.tree = is_tree(g);
  r.eulerian = is_eulerian(g);
  if (g.vertex_count() <= perfect_cap) r.perfect = is_perfect(g, perfect_cap);
  else r.skipped.push_back("perfect");
  r.cyclomatic = cyclomatic_number(g);
  r.pendant = pendant_vertices(g);
  r.bridges = cut_edges(g);
  return r;
}

// Stable key order; diameter "infinite" is an explicit string, never a
// sentinel integer; skipped/undefined fields serialize as null.
inline nlohmann::ordered_json report_to_json(const GraphReport& r) {
  nlohmann::ordered_json j;
  j["components"] = r.components;
  if (r.diameter) j["diameter"] = *r.diameter;
  else j["diameter"] = "infinite";
  j["kappa"] = r.kappa ? nlohmann::ordered_json(*r.kappa) : nlohmann::ordered_json(nullptr);
  j["alpha"] = r.alpha ? nlohmann::ordered_json(*r.alpha) : nlohmann::ordered_json(nullptr);
  j["omega"] = r.omega ? nlohmann::ordered_json(*r.omega) : nlohmann::ordered_json(nullptr);
  j["chi"] = r.chi ? nlohmann::ordered_json(*r.chi) : nlohmann::ordered_json(nullptr);
  j["planar"] = r.planar;
  j["bipartite"] = r.bipartite;
  j["tree"] = r.tree;
  j["eulerian"] = r.eulerian;
  j["perfect"] = r.perfect ? nlohmann::ordered_json(*r.perfect) : nlohmann::ordered_json(nullptr);
  j["cyclomatic"] = r.cyclomatic ? nlohmann::ordered_json(*r.cyclomatic) : nlohmann::ordered_json(nullptr);
  j["pendant_vertices"] = r.pendant;
  nlohmann::ordered_json bridges = nlohmann::ordered_json::array();
  for (auto [u, v] : r.bridges) bridges.push_back({u, v});
  j["cut_edges"] = std::move(bridges);
  j["skipped"] = r.skipped;
  return j;
}

}  // namespace gg
