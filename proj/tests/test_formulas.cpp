#include <catch2/catch_amalgamated.hpp>

#include "groupgraphs/builders.hpp"
#include "groupgraphs/catalog.hpp"
#include "groupgraphs/formulas.hpp"

using namespace gg;

namespace {
BigInt brute_pairs(const OrderSpectrum& sp) {
  std::vector<i64> orders;
  for (const auto& [d, c] : sp.counts)
    for (BigInt i = 0; i < c; ++i) orders.push_back(d);
  i64 count = 0;
  for (size_t i = 0; i < orders.size(); ++i)
    for (size_t j = i + 1; j < orders.size(); ++j)
      if (orders[i] % orders[j] == 0 || orders[j] % orders[i] == 0) ++count;
  return count;
}
}  // namespace

TEST_CASE("supergraph edge count formula", "[formulas]") {
  CHECK(supergraph_edge_count(spectrum_of(GroupSpec::cyclic(6))) == 13);
  // S4: 276 element pairs, 120 of them with incomparable orders
  CHECK(supergraph_edge_count(spectrum_of(GroupSpec::symmetric(4))) == 156);
  CHECK(brute_pairs(spectrum_of(GroupSpec::symmetric(4))) == 156);
  // p-groups give complete graphs
  CHECK(supergraph_edge_count(spectrum_of(GroupSpec::quaternion8())) == 28);
  CHECK(supergraph_edge_count(spectrum_of(parse_group_spec("E(3,2)"))) == 36);
}

TEST_CASE("edge formula equals brute force and the built graph", "[formulas]") {
  for (const char* text : {"Z30", "Z36", "D20", "D14", "S5", "A6", "SG(16,3)", "Z6xZ10"}) {
    GroupSpec s = parse_group_spec(text);
    OrderSpectrum sp = spectrum_of(s);
    INFO(text);
    CHECK(supergraph_edge_count(sp) == brute_pairs(sp));
    CHECK(supergraph_edge_count(sp) == order_supergraph(realize(s)).edge_count());
  }
}

TEST_CASE("cyclic closed form", "[formulas]") {
  CHECK(cyclic_power_edge_count(6) == 13);   // terms 0+2+6+18, halved
  CHECK(cyclic_power_edge_count(4) == 6);    // K4
  for (i64 p : {2, 3, 5, 7, 11, 13}) CHECK(cyclic_power_edge_count(p) == p * (p - 1) / 2);
  for (i64 n = 1; n <= 150; ++n) {
    INFO("n = " << n);
    CHECK(cyclic_power_edge_count(n) == supergraph_edge_count(spectrum_of(GroupSpec::cyclic(n))));
  }
  for (i64 n : {10, 24, 60}) {
    CHECK(cyclic_power_edge_count(n) == power_graph(realize(GroupSpec::cyclic(n))).edge_count());
  }
}

TEST_CASE("spectrum components", "[formulas]") {
  auto a5 = spectrum_components(spectrum_of(GroupSpec::alternating(5)));
  REQUIRE(a5.count() == 3);
  CHECK(a5.components[0].orders == std::vector<i64>{2});
  CHECK(a5.components[0].element_count == 15);
  CHECK(a5.components[1].orders == std::vector<i64>{3});
  CHECK(a5.components[1].element_count == 20);
  CHECK(a5.components[2].orders == std::vector<i64>{5});
  CHECK(a5.components[2].element_count == 24);

  auto s7 = spectrum_components(spectrum_of(GroupSpec::symmetric(7)));
  REQUIRE(s7.count() == 2);
  bool found_seven = false;
  for (const auto& comp : s7.components)
    if (comp.orders == std::vector<i64>{7}) found_seven = true;
  CHECK(found_seven);

  for (i64 n : {2, 5, 12, 100})
    CHECK(spectrum_components(spectrum_of(GroupSpec::cyclic(n))).count() == (n >= 2 ? 1 : 0));
  CHECK(spectrum_components(spectrum_of(GroupSpec::cyclic(1))).count() == 0);

  // element counts sum to |G| - 1
  for (const char* text : {"S6", "A8", "D20", "Z36"}) {
    OrderSpectrum sp = spectrum_of(parse_group_spec(text));
    BigInt total = 0;
    for (const auto& comp : spectrum_components(sp).components) total += comp.element_count;
    CHECK(total == sp.group_size - 1);
  }

  // component spectra agree with materialized proper supergraphs
  for (const char* text : {"S5", "A6", "Z12", "D18"}) {
    GroupSpec s = parse_group_spec(text);
    auto graph_comps = connected_components(proper_graph(order_supergraph(realize(s))));
    CHECK(graph_comps.size() == spectrum_components(spectrum_of(s)).count());
  }
}

TEST_CASE("coprime partition check", "[formulas]") {
  CHECK(coprime_partition_check({1, 2, 3, 4, 5, 6}, {5}));
  CHECK_FALSE(coprime_partition_check({1, 2, 3, 6}, {2}));
  CHECK_FALSE(coprime_partition_check({1, 2, 3}, {2, 3}));  // complement empty
  CHECK_THROWS_AS(coprime_partition_check({1, 2, 3}, {5}), std::invalid_argument);
  CHECK_THROWS_AS(coprime_partition_check({1, 2, 3}, {1}), std::invalid_argument);
  // a coprime partition forces a disconnected proper supergraph
  OrderSpectrum s5 = spectrum_of(GroupSpec::symmetric(5));
  std::set<i64> pi_e(s5.support().begin(), s5.support().end());
  REQUIRE(coprime_partition_check(pi_e, {5}));
  CHECK(spectrum_components(s5).count() >= 2);
}
