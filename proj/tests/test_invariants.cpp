#include <catch2/catch_amalgamated.hpp>

#include "groupgraphs/builders.hpp"
#include "groupgraphs/catalog.hpp"
#include "groupgraphs/invariants.hpp"
#include "support/oracles.hpp"

using namespace gg;

TEST_CASE("components and diameter", "[invariants]") {
  SimpleGraph empty3(3);
  CHECK(connected_components(empty3).size() == 3);
  CHECK_FALSE(diameter(empty3).has_value());
  CHECK(diameter(complete_graph(5)) == 1);
  CHECK(diameter(path_graph(4)) == 3);
  CHECK(diameter(SimpleGraph(1)) == 0);
  SimpleGraph s3_star = proper_graph(order_supergraph(realize(GroupSpec::symmetric(3))));
  CHECK(connected_components(s3_star).size() == 2);
  for (const char* text : {"Z9", "Z12", "D12", "S4", "Q8"}) {
    SimpleGraph s = order_supergraph(realize(parse_group_spec(text)));
    auto d = diameter(s);
    REQUIRE(d.has_value());
    CHECK(*d <= 2);
  }
}

TEST_CASE("bipartite, tree, eulerian, pendant", "[invariants]") {
  CHECK(is_bipartite(path_graph(5)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_tree(path_graph(4)));
  CHECK(is_tree(SimpleGraph(1)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK_FALSE(is_tree(SimpleGraph(2)));  // disconnected
  CHECK(is_eulerian(cycle_graph(5)));
  CHECK_FALSE(is_eulerian(path_graph(3)));
  CHECK(is_eulerian(SimpleGraph(1)));
  SimpleGraph k2 = complete_graph(2);
  CHECK(pendant_vertices(k2) == std::vector<int>{0, 1});
  CHECK(pendant_vertices(cycle_graph(4)).empty());
}

TEST_CASE("bridges", "[invariants]") {
  // two triangles joined by one edge: only the joining edge is a bridge
  SimpleGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  CHECK(cut_edges(g) == std::vector<Edge>{{2, 3}});
  CHECK(cut_edges(path_graph(4)) == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(cut_edges(cycle_graph(5)).empty());
  // an isolated K2 component is itself a bridge
  SimpleGraph two(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  CHECK(cut_edges(two) == std::vector<Edge>{{3, 4}});
}

TEST_CASE("cyclomatic number", "[invariants]") {
  CHECK(cyclomatic_number(cycle_graph(5)) == 1);
  CHECK(cyclomatic_number(path_graph(4)) == 0);
  CHECK_FALSE(cyclomatic_number(SimpleGraph(2)).has_value());
  CHECK(cyclomatic_number(order_supergraph(realize(GroupSpec::symmetric(3)))) == 4);
  CHECK(cyclomatic_number(order_supergraph(realize(GroupSpec::cyclic(3)))) == 1);
  CHECK(cyclomatic_number(order_supergraph(realize(GroupSpec::cyclic(4)))) == 3);
}

TEST_CASE("vertex connectivity on known graphs", "[invariants][kappa]") {
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(path_graph(3)) == 1);
  CHECK(vertex_connectivity(cycle_graph(6)) == 2);
  CHECK(vertex_connectivity(SimpleGraph(3)) == 0);
  CHECK_THROWS_AS(vertex_connectivity(SimpleGraph(1)), std::invalid_argument);
  CHECK(vertex_connectivity(order_supergraph(realize(GroupSpec::cyclic(4)))) == 3);
  CHECK(vertex_connectivity(order_supergraph(realize(GroupSpec::cyclic(6)))) == 3);
  // complete bipartite K(3,4): kappa = 3
  std::vector<Edge> es;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 7; ++v) es.push_back({u, v});
  CHECK(vertex_connectivity(SimpleGraph(7, es)) == 3);
}

TEST_CASE("vertex connectivity agrees with subset brute force", "[invariants][kappa]") {
  for (unsigned seed = 0; seed < 60; ++seed) {
    SimpleGraph g = oracle::random_graph(7, 20 + (seed * 7) % 70, seed);
    INFO("seed " << seed);
    CHECK(vertex_connectivity(g) == oracle::kappa_brute(g));
  }
  for (unsigned seed = 0; seed < 20; ++seed) {
    SimpleGraph g = oracle::random_graph(8, 50, 100 + seed);
    CHECK(vertex_connectivity(g) == oracle::kappa_brute(g));
    CHECK(vertex_connectivity_at_least(g, 2) == (oracle::kappa_brute(g) >= 2));
  }
}

TEST_CASE("two-connectivity equivalence for supergraphs", "[invariants][kappa]") {
  // S(G) is 2-connected iff the proper graph is connected (|G| >= 3)
  for (i64 order = 3; order <= 16; ++order)
    for (const auto& s : small_group_catalog(order)) {
      SimpleGraph sg = order_supergraph(realize(s));
      bool two_conn = vertex_connectivity(sg) >= 2;
      bool star_conn = connected_components(proper_graph(sg)).size() == 1;
      INFO(catalog_name(order, s.index));
      CHECK(two_conn == star_conn);
    }
}

TEST_CASE("exact alpha, omega, chi on small graphs", "[invariants][exact]") {
  SimpleGraph k5_k2 = a_join(SimpleGraph(2), {complete_graph(5), complete_graph(2)});
  CHECK(clique_number(k5_k2) == 5);
  CHECK(chromatic_number(k5_k2) == 5);
  CHECK(independence_number(k5_k2) == 2);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(independence_number(SimpleGraph(6)) == 6);
  for (unsigned seed = 0; seed < 40; ++seed) {
    SimpleGraph g = oracle::random_graph(9, 15 + (seed * 11) % 75, 500 + seed);
    INFO("seed " << seed);
    CHECK(independence_number(g) == oracle::alpha_brute(g));
    CHECK(clique_number(g) == oracle::omega_brute(g));
    CHECK(chromatic_number(g) == oracle::chi_brute(g));
  }
  CHECK_THROWS_AS(clique_number(SimpleGraph(80), 64), ExactCapExceeded);
}

TEST_CASE("quotient shortcuts for alpha and omega", "[invariants][exact]") {
  // alpha(S(Z6)) = 2 = |pi(Z6)|
  CHECK(supergraph_alpha(spectrum_of(GroupSpec::cyclic(6))) == 2);
  // alpha(S(A5)) = 3 = |pi_e| - 1 for the EPO group A5
  CHECK(supergraph_alpha(spectrum_of(GroupSpec::alternating(5))) == 3);
  for (const char* text : {"Z12", "Z30", "S4", "A5", "D12", "SG(16,3)"}) {
    GroupSpec spec = parse_group_spec(text);
    OrderSpectrum sp = spectrum_of(spec);
    SimpleGraph sg = order_supergraph(realize(spec));
    INFO(text);
    CHECK(supergraph_alpha(sp) == independence_number(sg, 200));
    CHECK(supergraph_omega(sp) == BigInt(clique_number(sg, 200)));
  }
}

TEST_CASE("perfectness", "[invariants][perfect]") {
  CHECK_FALSE(is_perfect(cycle_graph(5)));
  CHECK_FALSE(is_perfect(cycle_graph(7)));
  CHECK(is_perfect(cycle_graph(6)));
  CHECK(is_perfect(complete_graph(6)));
  CHECK(is_perfect(path_graph(7)));
  // bipartite graphs are perfect; the complement search still runs
  std::vector<Edge> es;
  for (int u = 0; u < 4; ++u)
    for (int v = 4; v < 8; ++v)
      if ((u + v) % 3 != 0) es.push_back({u, v});
  CHECK(is_perfect(SimpleGraph(8, es)));
  CHECK_THROWS_AS(is_perfect(SimpleGraph(50), 40), ExactCapExceeded);
}

TEST_CASE("perfectness agrees with the chi-omega definition", "[invariants][perfect]") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    SimpleGraph g = oracle::random_graph(8, 20 + (seed * 13) % 65, 900 + seed);
    INFO("seed " << seed);
    CHECK(is_perfect(g) == oracle::perfect_brute(g));
  }
}

TEST_CASE("supergraphs of small groups are perfect", "[invariants][perfect]") {
  for (const char* text : {"Z24", "S4", "D16", "Q8", "A4", "SG(16,14)", "Z2xZ6"}) {
    INFO(text);
    CHECK(is_perfect(order_supergraph(realize(parse_group_spec(text)))));
  }
}

TEST_CASE("universal vertices", "[invariants]") {
  CHECK(universal_vertices(complete_graph(3)) == std::vector<int>{0, 1, 2});
  CHECK(universal_vertices(path_graph(3)) == std::vector<int>{1});
  SimpleGraph z6 = order_supergraph(realize(GroupSpec::cyclic(6)));
  CHECK(universal_vertices(z6).size() == 3);  // identity and both generators
}
