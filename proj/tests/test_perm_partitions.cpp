#include <catch2/catch_amalgamated.hpp>

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/partitions.hpp"
#include "groupgraphs/perm.hpp"
#include "support/oracles.hpp"

using namespace gg;

TEST_CASE("cycle notation round trip", "[perm]") {
  Perm p = parse_cycles("(1 2 3)(4 5)");
  CHECK(p == Perm{1, 2, 0, 4, 3});
  CHECK(format_cycles(p) == "(1 2 3)(4 5)");
  CHECK(parse_cycles("") == Perm{0});
  CHECK(parse_cycles("()") == Perm{0});
  CHECK(format_cycles(perm_identity(4)) == "()");
  CHECK_THROWS_AS(parse_cycles("(1 1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("1 2"), std::invalid_argument);
}

TEST_CASE("composition and inverse", "[perm]") {
  Perm a = parse_cycles("(1 2 3)", 4);
  Perm b = parse_cycles("(3 4)", 4);
  // (a o b)(x) = a(b(x)): 3 -> 4, 4 -> 3 -> 1
  Perm ab = perm_compose(a, b);
  CHECK(ab[2] == 3);
  CHECK(ab[3] == 0);
  for (unsigned seed = 0; seed < 20; ++seed) {
    Perm p = perm_identity(6);
    unsigned s = seed;
    for (int i = 5; i > 0; --i) {
      s = s * 1103515245u + 12345u;
      std::swap(p[i], p[s % (i + 1)]);
    }
    CHECK(perm_is_identity(perm_compose(p, perm_inverse(p))));
    CHECK(perm_is_identity(perm_compose(perm_inverse(p), p)));
  }
}

TEST_CASE("cycle type and parity", "[perm]") {
  CHECK(cycle_type(parse_cycles("(1 2 3)(4 5)", 6)) == std::vector<int>{3, 2, 1});
  CHECK(perm_is_even(parse_cycles("(1 2 3)")));
  CHECK_FALSE(perm_is_even(parse_cycles("(1 2)")));
  CHECK(perm_is_even(parse_cycles("(1 2)(3 4)")));
}

TEST_CASE("partition enumeration counts", "[partitions]") {
  // p(n) for n = 1..10
  const int pn[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) {
    int count = 0;
    for_each_partition(n, [&](const Partition& p) {
      ++count;
      CHECK(p.sum() == n);
      CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    });
    CHECK(count == pn[n - 1]);
  }
}

TEST_CASE("partition permutation counts sum to factorials", "[partitions]") {
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0, even_total = 0;
    for_each_partition(n, [&](const Partition& p) {
      total += p.permutation_count();
      if (p.even()) even_total += p.permutation_count();
    });
    CHECK(total == big_factorial(n));
    if (n >= 2) CHECK(even_total * 2 == total);
  }
}

TEST_CASE("partition order matches a realized permutation", "[partitions]") {
  Partition p{{4, 3, 2, 1}};
  CHECK(p.order() == 12);
  Perm realized = parse_cycles("(1 2 3 4)(5 6 7)(8 9)", 10);
  CHECK(oracle::perm_order_by_cycle_type(realized) == p.order());
  CHECK(p.permutation_count() == BigInt(10 * 9 * 8 * 7 * 6 * 5 * 4 * 3 * 2) / (4 * 3 * 2));
}
