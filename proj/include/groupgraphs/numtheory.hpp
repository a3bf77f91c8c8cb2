#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gg {

using i64 = std::int64_t;

inline i64 lcm_i64(i64 a, i64 b) { return std::lcm(a, b); }

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// prime -> exponent, ascending
inline std::map<i64, int> factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::map<i64, int> f;
  for (i64 p = 2; p * p <= n; ++p)
    while (n % p == 0) { ++f[p]; n /= p; }
  if (n > 1) ++f[n];
  return f;
}

inline std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

inline bool is_prime_power(i64 n) {  // 1 counts as p^0
  return factorize(n).size() <= 1;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

inline i64 euler_totient(i64 n) {
  if (n < 1) throw std::invalid_argument("euler_totient: n must be positive");
  i64 r = n;
  for (auto& [p, e] : factorize(n)) r -= r / p;
  return r;
}

inline bool divides(i64 a, i64 b) { return a != 0 && b % a == 0; }

// r | s or s | r (the adjacency rule on element orders)
inline bool orders_comparable(i64 r, i64 s) { return divides(r, s) || divides(s, r); }

}  // namespace gg
