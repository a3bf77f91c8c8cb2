#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/numtheory.hpp"
#include "groupgraphs/spectrum.hpp"

namespace gg {

// Exact edge count of the order supergraph from the spectrum alone:
//   e = 1/2 * sum_d omega_d * (2 * sum_{d'|d} omega_{d'} - omega_d - 1).
inline BigInt supergraph_edge_count(const OrderSpectrum& sp) {
  BigInt twice = 0;
  for (const auto& [d, c] : sp.counts) {
    if (c == 0) continue;
    BigInt below = 0;
    for (const auto& [e, ce] : sp.counts)
      if (d % e == 0) below += ce;
    twice += c * (2 * below - c - 1);
  }
  if (twice % 2 != 0) throw std::logic_error("edge count formula produced an odd total");
  return twice / 2;
}

// Edge count of the power graph of Z_n, which equals its order supergraph:
//   2e = sum_{d|n} (2d - phi(d) - 1) * phi(d).
inline BigInt cyclic_power_edge_count(i64 n) {
  if (n < 1) throw std::invalid_argument("cyclic_power_edge_count: n must be >= 1");
  BigInt twice = 0;
  for (i64 d : divisors(n)) {
    BigInt phi = euler_totient(d);
    twice += (2 * BigInt(d) - phi - 1) * phi;
  }
  return twice / 2;
}

// Components of the proper order supergraph, computed without materializing
// the graph: adjacency depends only on element orders, so the components are
// those of the order graph minus the vertex 1, weighted by class sizes.
struct SpectrumComponentReport {
  struct Component {
    std::vector<i64> orders;   // ascending
    BigInt element_count;
  };
  std::vector<Component> components;  // sorted by smallest order

  size_t count() const { return components.size(); }
};

inline SpectrumComponentReport spectrum_components(const OrderSpectrum& sp) {
  std::vector<i64> sup;
  for (i64 d : sp.support())
    if (d != 1) sup.push_back(d);
  int n = static_cast<int>(sup.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (orders_comparable(sup[i], sup[j])) parent[find(i)] = find(j);
  std::map<int, SpectrumComponentReport::Component> by_root;
  for (int i = 0; i < n; ++i) {
    auto& c = by_root[find(i)];
    c.orders.push_back(sup[i]);
    c.element_count += sp.count(sup[i]);
  }
  SpectrumComponentReport rep;
  for (auto& [root, comp] : by_root) {
    std::sort(comp.orders.begin(), comp.orders.end());
    rep.components.push_back(std::move(comp));
  }
  std::sort(rep.components.begin(), rep.components.end(),
            [](const auto& a, const auto& b) { return a.orders.front() < b.orders.front(); });
  return rep;
}

// True iff L and its complement within pi_e \ {1} are both nonempty and
// element-wise coprime. When this holds the proper order supergraph is
// disconnected, hence the order supergraph is not 2-connected.
inline bool coprime_partition_check(const std::set<i64>& pi_e, const std::set<i64>& L) {
  for (i64 l : L)
    if (l == 1 || !pi_e.count(l))
      throw std::invalid_argument("coprime partition: L must be a subset of pi_e minus {1}");
  std::vector<i64> K;
  for (i64 d : pi_e)
    if (d != 1 && !L.count(d)) K.push_back(d);
  if (L.empty() || K.empty()) return false;
  for (i64 l : L)
    for (i64 k : K)
      if (std::gcd(l, k) != 1) return false;
  return true;
}

}  // namespace gg
