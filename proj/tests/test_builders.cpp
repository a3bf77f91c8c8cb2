#include <catch2/catch_amalgamated.hpp>

#include "groupgraphs/builders.hpp"
#include "groupgraphs/catalog.hpp"
#include "groupgraphs/invariants.hpp"

using namespace gg;

TEST_CASE("power graph examples", "[builders]") {
  CHECK(power_graph(realize(GroupSpec::cyclic(6))).edge_count() == 13);
  CHECK(power_graph(realize(GroupSpec::cyclic(4))).is_complete());
  CHECK(power_graph(realize(GroupSpec::cyclic(1))).vertex_count() == 1);
  CHECK(power_graph(realize(GroupSpec::cyclic(1))).edge_count() == 0);
}

TEST_CASE("order supergraph examples", "[builders]") {
  SimpleGraph z6 = order_supergraph(realize(GroupSpec::cyclic(6)));
  CHECK(z6.edge_count() == 13);
  CHECK(z6 == power_graph(realize(GroupSpec::cyclic(6))));
  SimpleGraph s3 = order_supergraph(realize(GroupSpec::symmetric(3)));
  CHECK(s3.edge_count() == 9);
  SimpleGraph q8 = order_supergraph(realize(GroupSpec::quaternion8()));
  CHECK(q8.is_complete());
  CHECK(q8.edge_count() == 28);
}

TEST_CASE("the power graph is a subgraph of the supergraph", "[builders]") {
  for (const char* text : {"Z12", "D12", "S4", "A4", "Q8", "SG(16,13)", "Z3xS3"}) {
    FiniteGroup g = realize(parse_group_spec(text));
    SimpleGraph p = power_graph(g), s = order_supergraph(g);
    INFO(text);
    for (auto e : p.edges()) CHECK(s.has_edge(e.first, e.second));
    // identity is adjacent to everything in the supergraph
    CHECK(s.degree(0) == g.size() - 1);
  }
}

TEST_CASE("proper graphs of small supergraphs", "[builders]") {
  CHECK(proper_graph(order_supergraph(realize(GroupSpec::cyclic(2)))).vertex_count() == 1);
  SimpleGraph s3_star = proper_graph(order_supergraph(realize(GroupSpec::symmetric(3))));
  CHECK(connected_components(s3_star).size() == 2);
  CHECK(s3_star.edge_count() == 4);  // K3 plus K2
  CHECK(proper_graph(order_supergraph(realize(GroupSpec::cyclic(4)))) == complete_graph(3));
}

TEST_CASE("directed order supergraph", "[builders]") {
  FiniteGroup z6 = realize(GroupSpec::cyclic(6));
  DirectedGraph d = directed_order_supergraph(z6);
  CHECK(d.out_degree(0) == 0);
  CHECK(d.in_degree(0) == 5);
  CHECK(d.out_degree(1) == 5);  // a generator dominates everything
  // Outdeg(x) = sum over divisors of o(x) of omega_d, minus x itself
  OrderSpectrum sp = tally_spectrum(z6);
  for (int x = 0; x < z6.size(); ++x) {
    BigInt expect = -1;
    for (i64 dv : divisors(z6.order_of(x))) expect += sp.count(dv);
    CHECK(BigInt(d.out_degree(x)) == expect);
  }
  CHECK(d.underlying_undirected() == order_supergraph(z6));

  FiniteGroup s3 = realize(GroupSpec::symmetric(3));
  DirectedGraph ds3 = directed_order_supergraph(s3);
  i64 total = 0;
  for (int x = 0; x < s3.size(); ++x) total += ds3.out_degree(x);
  CHECK(total == 13);  // 2 * (4 symmetric pairs) + 5 asymmetric arcs
  // mutual arcs occur exactly between equal orders
  for (auto [x, t] : ds3.arcs()) {
    bool mutual = false;
    for (auto [a, b] : ds3.arcs())
      if (a == t && b == x) mutual = true;
    CHECK(mutual == (s3.order_of(x) == s3.order_of(t)));
  }
}

TEST_CASE("order graph examples", "[builders]") {
  SimpleGraph z12 = order_graph(GroupSpec::cyclic(12));
  CHECK(z12.labels() == std::vector<i64>{1, 2, 3, 4, 6, 12});
  std::vector<Edge> non_edges;
  for (int i = 0; i < z12.vertex_count(); ++i)
    for (int j = i + 1; j < z12.vertex_count(); ++j)
      if (!z12.has_edge(i, j)) non_edges.push_back({i, j});
  // non-adjacent order pairs: {2,3}, {3,4}, {4,6}
  auto lbl = [&](Edge e) { return std::pair<i64, i64>{z12.label(e.first), z12.label(e.second)}; };
  REQUIRE(non_edges.size() == 3);
  CHECK(lbl(non_edges[0]) == std::pair<i64, i64>{2, 3});
  CHECK(lbl(non_edges[1]) == std::pair<i64, i64>{3, 4});
  CHECK(lbl(non_edges[2]) == std::pair<i64, i64>{4, 6});

  SimpleGraph a5 = order_graph(GroupSpec::alternating(5));
  CHECK(a5.vertex_count() == 4);
  CHECK(a5.edge_count() == 3);
  CHECK(a5.degree(0) == 3);  // the order-1 vertex is the star center

  SimpleGraph q8 = order_graph(GroupSpec::quaternion8());
  CHECK(q8.is_complete());
}

TEST_CASE("prime graph examples", "[builders]") {
  SimpleGraph z6 = prime_graph(GroupSpec::cyclic(6));
  CHECK(z6.labels() == std::vector<i64>{2, 3});
  CHECK(z6.edge_count() == 1);
  CHECK(prime_graph(GroupSpec::alternating(5)).edge_count() == 0);
  SimpleGraph s5 = prime_graph(GroupSpec::symmetric(5));
  CHECK(s5.labels() == std::vector<i64>{2, 3, 5});
  CHECK(s5.edge_count() == 1);
  CHECK(s5.has_edge(0, 1));  // {2,3} via the order-6 element
  CHECK(s5.degree(2) == 0);  // 5 is isolated
}

TEST_CASE("supergraph from spectrum equals the group construction", "[builders]") {
  for (const char* text : {"Z6", "Z12", "S3", "S4", "A5", "D12", "Q8", "SG(16,7)"}) {
    GroupSpec spec = parse_group_spec(text);
    SimpleGraph rebuilt = supergraph_from_spectrum(spectrum_of(spec));
    SimpleGraph sorted = sort_vertices_by_label(order_supergraph(realize(spec)));
    INFO(text);
    CHECK(rebuilt == sorted);
    CHECK(rebuilt.labels() == sorted.labels());
  }
  CHECK(supergraph_from_spectrum(spectrum_of(GroupSpec::cyclic(1))) == complete_graph(1));
  CHECK_THROWS_AS(supergraph_from_spectrum(spectrum_of(GroupSpec::symmetric(9)), 5000),
                  CapExceeded);
}

TEST_CASE("quotient by order classes is the order graph", "[builders]") {
  for (i64 order : {6, 8, 12, 16, 20}) {
    for (const auto& s : small_group_catalog(order)) {
      FiniteGroup g = realize(s);
      SimpleGraph quot = quotient_graph(order_supergraph(g), order_class_partition(g));
      SimpleGraph og = order_graph(s);
      INFO(g.label());
      CHECK(quot == og);
      CHECK(quot.labels() == og.labels());
    }
  }
}
