#include <catch2/catch_amalgamated.hpp>

#include "groupgraphs/numtheory.hpp"
#include "support/oracles.hpp"

using namespace gg;

TEST_CASE("euler totient matches the gcd-count definition", "[numtheory]") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(6) == 2);
  CHECK(euler_totient(12) == 4);
  for (i64 n = 1; n <= 300; ++n)
    CHECK(euler_totient(n) == oracle::totient_by_gcd_count(n));
  CHECK_THROWS_AS(euler_totient(0), std::invalid_argument);
}

TEST_CASE("factorization and primes", "[numtheory]") {
  CHECK(factorize(360) == std::map<i64, int>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(prime_factors(360) == std::vector<i64>{2, 3, 5});
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime_power(1));
  CHECK(is_prime_power(32));
  CHECK(is_prime_power(27));
  CHECK_FALSE(is_prime_power(12));
}

TEST_CASE("divisors are sorted and complete", "[numtheory]") {
  CHECK(divisors(1) == std::vector<i64>{1});
  CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  for (i64 n = 1; n <= 200; ++n) {
    auto ds = divisors(n);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    i64 cnt = 0;
    for (i64 d = 1; d <= n; ++d)
      if (n % d == 0) ++cnt;
    CHECK(static_cast<i64>(ds.size()) == cnt);
  }
}

TEST_CASE("order comparability", "[numtheory]") {
  CHECK(orders_comparable(2, 6));
  CHECK(orders_comparable(6, 2));
  CHECK(orders_comparable(5, 5));
  CHECK_FALSE(orders_comparable(4, 6));
  CHECK(orders_comparable(1, 7));
}
