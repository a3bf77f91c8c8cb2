#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "groupgraphs/catalog.hpp"
#include "groupgraphs/spectrum.hpp"

using namespace gg;

namespace {
std::map<i64, BigInt> counts_of(const OrderSpectrum& sp) {
  std::map<i64, BigInt> m;
  for (const auto& [d, c] : sp.counts)
    if (c > 0) m[d] = c;
  return m;
}
}  // namespace

TEST_CASE("spectrum of S4 and small cyclic groups", "[spectrum]") {
  CHECK(counts_of(spectrum_of(GroupSpec::symmetric(4))) ==
        std::map<i64, BigInt>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  CHECK(counts_of(spectrum_of(GroupSpec::cyclic(6))) ==
        std::map<i64, BigInt>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK(counts_of(spectrum_of(GroupSpec::cyclic(1))) == std::map<i64, BigInt>{{1, 1}});
}

TEST_CASE("cyclic spectra have totient counts", "[spectrum]") {
  for (i64 n = 1; n <= 200; ++n) {
    OrderSpectrum sp = spectrum_of(GroupSpec::cyclic(n));
    for (i64 d : divisors(n)) CHECK(sp.count(d) == euler_totient(d));
    CHECK(static_cast<i64>(sp.support().size()) ==
          static_cast<i64>(divisors(n).size()));
  }
}

TEST_CASE("combinatorial spectra agree with realized tallies", "[spectrum]") {
  for (i64 n = 2; n <= 7; ++n) {
    OrderSpectrum combinatorial = spectrum_of(GroupSpec::symmetric(n));
    OrderSpectrum tallied = tally_spectrum(realize(GroupSpec::symmetric(n), 5100));
    CHECK(counts_of(combinatorial) == counts_of(tallied));
  }
  for (i64 n = 3; n <= 8; ++n) {
    OrderSpectrum combinatorial = spectrum_of(GroupSpec::alternating(n));
    OrderSpectrum tallied = tally_spectrum(realize(GroupSpec::alternating(n), 21000));
    CHECK(counts_of(combinatorial) == counts_of(tallied));
  }
}

TEST_CASE("alternating group supports match the published lists", "[spectrum]") {
  auto support_set = [](i64 n) {
    auto sup = spectrum_of(GroupSpec::alternating(n)).support();
    return std::set<i64>(sup.begin(), sup.end());
  };
  CHECK(support_set(4) == std::set<i64>{1, 2, 3});
  CHECK(support_set(5) == std::set<i64>{1, 2, 3, 5});
  CHECK(support_set(6) == std::set<i64>{1, 2, 3, 4, 5});
  CHECK(support_set(7) == std::set<i64>{1, 2, 3, 4, 5, 6, 7});
  CHECK(support_set(8) == std::set<i64>{1, 2, 3, 4, 5, 6, 7, 15});
  CHECK(support_set(9) == std::set<i64>{1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15});
  CHECK(support_set(10) == std::set<i64>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 21});
}

TEST_CASE("product spectra: convolution equals realized tally", "[spectrum]") {
  for (const char* text : {"Z2xZ4", "Z6xZ10", "S3xZ4", "Q8xZ3", "D8xS3", "Z2xZ2xZ5"}) {
    GroupSpec s = parse_group_spec(text);
    OrderSpectrum convolved = spectrum_of(s);
    OrderSpectrum tallied = tally_spectrum(realize(s));
    INFO(text);
    CHECK(counts_of(convolved) == counts_of(tallied));
  }
}

TEST_CASE("exponent and prime sets", "[spectrum]") {
  CHECK(exponent(GroupSpec::symmetric(3)) == 6);
  CHECK(exponent(GroupSpec::quaternion8()) == 4);
  for (i64 n : {1, 4, 9, 30, 100}) CHECK(exponent(GroupSpec::cyclic(n)) == n);
  CHECK(prime_set(GroupSpec::cyclic(6)) == std::set<i64>{2, 3});
  CHECK(element_order_set(GroupSpec::cyclic(6)) == std::set<i64>{1, 2, 3, 6});
  CHECK(element_order_set(GroupSpec::alternating(5)) == std::set<i64>{1, 2, 3, 5});
  CHECK(prime_set(GroupSpec::cyclic(1)).empty());
  CHECK(element_order_set(GroupSpec::cyclic(1)) == std::set<i64>{1});
}

TEST_CASE("group-class predicates", "[spectrum]") {
  OrderSpectrum s3 = spectrum_of(GroupSpec::symmetric(3));
  CHECK(is_eppo(s3));
  CHECK(is_epo(s3));
  CHECK_FALSE(is_full_exponent(s3));
  OrderSpectrum z6 = spectrum_of(GroupSpec::cyclic(6));
  CHECK_FALSE(is_eppo(z6));
  CHECK(is_full_exponent(z6));
  CHECK(is_cyclic(z6));
  CHECK(is_epo(spectrum_of(GroupSpec::alternating(5))));
  CHECK(is_p_group(spectrum_of(GroupSpec::quaternion8())));
  CHECK_FALSE(is_p_group(z6));
  CHECK_FALSE(is_cyclic(spectrum_of(GroupSpec::symmetric(3))));
}

TEST_CASE("cyclicity is witnessed by phi(|G|) top-order elements", "[spectrum]") {
  for (i64 order = 1; order <= kCatalogMaxOrder; ++order)
    for (const auto& s : small_group_catalog(order)) {
      OrderSpectrum sp = spectrum_of(s);
      bool cyclic = is_cyclic(sp);
      if (cyclic) CHECK(sp.count(order) == euler_totient(order));
      CHECK(cyclic == (sp.count(order) > 0));
    }
}

TEST_CASE("spectrum JSON uses decimal strings", "[spectrum]") {
  auto j = spectrum_to_json(spectrum_of(GroupSpec::symmetric(4)));
  CHECK(j["group_size"] == "24");
  CHECK(j["counts"]["2"] == "9");
  // counts appear in ascending order of the element order
  std::vector<std::string> keys;
  for (auto it = j["counts"].begin(); it != j["counts"].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"1", "2", "3", "4"});
  // exact big counts: S21 has 21! elements
  auto big = spectrum_to_json(spectrum_of(GroupSpec::symmetric(21)));
  CHECK(big["group_size"] == "51090942171709440000");
}

TEST_CASE("spectrum validation invariants", "[spectrum]") {
  for (const char* text : {"Z12", "D20", "Q8", "S6", "A7", "SG(16,13)"}) {
    OrderSpectrum sp = spectrum_of(parse_group_spec(text));
    BigInt total = 0;
    for (i64 d : sp.support()) {
      total += sp.count(d);
      CHECK(sp.count(d) >= euler_totient(d));
    }
    CHECK(total == sp.group_size);
    CHECK(sp.count(1) == 1);
  }
  CHECK_THROWS_AS(spectrum_of(GroupSpec::symmetric(41)), std::invalid_argument);
}
