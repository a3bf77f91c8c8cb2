#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/numtheory.hpp"

namespace gg {

// Integer partition: parts in weakly decreasing order, summing to n.
struct Partition {
  std::vector<int> parts;

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  // Order of a permutation with this cycle type.
  i64 order() const {
    i64 l = 1;
    for (int p : parts) l = std::lcm<i64>(l, p);
    return l;
  }

  // A permutation is even iff n minus the number of cycles is even.
  bool even() const { return (sum() - static_cast<int>(parts.size())) % 2 == 0; }

  // Number of permutations in S_n with this cycle type: n! / prod(k^{m_k} m_k!)
  BigInt permutation_count() const {
    int n = sum();
    BigInt denom = 1;
    int run = 0, prev = -1;
    for (int p : parts) {
      denom *= p;
      if (p == prev) { ++run; denom *= run; }
      else { prev = p; run = 1; }
    }
    return big_factorial(static_cast<unsigned>(n)) / denom;
  }
};

// Enumerates all partitions of n in descending-lex order (largest part first).
inline void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_partition: n must be >= 1");
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) { fn(cur); return; }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.parts.push_back(p);
      rec(remaining - p, p);
      cur.parts.pop_back();
    }
  };
  rec(n, n);
}

}  // namespace gg
