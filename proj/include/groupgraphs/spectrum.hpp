#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/group.hpp"
#include "groupgraphs/numtheory.hpp"
#include "groupgraphs/partitions.hpp"
#include "groupgraphs/spec.hpp"

namespace gg {

constexpr i64 kSymmetricSpectrumMax = 40;

// Exact map order -> number of elements of that order, plus |G|.
struct OrderSpectrum {
  std::map<i64, BigInt> counts;
  BigInt group_size;

  void validate() const {
    auto it = counts.find(1);
    if (it == counts.end() || it->second != 1)
      throw std::logic_error("spectrum: count of order 1 must be exactly 1");
    BigInt total = 0;
    i64 support_lcm = 1;
    for (const auto& [d, c] : counts) {
      if (d < 1 || c < 0) throw std::logic_error("spectrum: bad entry");
      if (c == 0) continue;
      total += c;
      support_lcm = std::lcm<i64>(support_lcm, d);
      if (c < euler_totient(d))
        throw std::logic_error("spectrum: count below phi(" + std::to_string(d) + ")");
    }
    if (total != group_size) throw std::logic_error("spectrum: counts do not sum to |G|");
    for (const auto& [d, c] : counts)
      if (c > 0 && support_lcm % d != 0)
        throw std::logic_error("spectrum: order does not divide exponent");
  }

  std::vector<i64> support() const {
    std::vector<i64> s;
    for (const auto& [d, c] : counts)
      if (c > 0) s.push_back(d);
    return s;
  }

  BigInt count(i64 d) const {
    auto it = counts.find(d);
    return it == counts.end() ? BigInt(0) : it->second;
  }
};

inline OrderSpectrum tally_spectrum(const FiniteGroup& g) {
  OrderSpectrum sp;
  sp.group_size = g.size();
  for (int e = 0; e < g.size(); ++e) sp.counts[g.order_of(e)] += 1;
  sp.validate();
  return sp;
}

namespace detail {

inline OrderSpectrum cyclic_spectrum(i64 n) {
  OrderSpectrum sp;
  sp.group_size = n;
  for (i64 d : divisors(n)) sp.counts[d] = euler_totient(d);
  sp.validate();
  return sp;
}

// S_n (or A_n): each partition with multiplicities m_k of part k contributes
// n!/prod(k^{m_k} m_k!) permutations of order lcm(parts); A_n keeps the even ones.
inline OrderSpectrum permutation_spectrum(i64 n, bool alternating) {
  if (n > kSymmetricSpectrumMax)
    throw std::invalid_argument("combinatorial spectrum limited to n <= 40");
  OrderSpectrum sp;
  sp.group_size = 0;
  for_each_partition(static_cast<int>(n), [&](const Partition& p) {
    if (alternating && !p.even()) return;
    BigInt c = p.permutation_count();
    sp.counts[p.order()] += c;
    sp.group_size += c;
  });
  sp.validate();
  return sp;
}

// Order of (a,b) in a product is lcm(o(a), o(b)).
inline OrderSpectrum convolve_spectra(const OrderSpectrum& a, const OrderSpectrum& b) {
  OrderSpectrum sp;
  sp.group_size = a.group_size * b.group_size;
  for (const auto& [da, ca] : a.counts)
    for (const auto& [db, cb] : b.counts)
      sp.counts[std::lcm<i64>(da, db)] += ca * cb;
  sp.validate();
  return sp;
}

}  // namespace detail

// Exact order spectrum. Symmetric/Alternating use the cycle-type path (n <= 40),
// cyclic groups the totient formula, direct products the lcm convolution, and
// everything else is realized and tallied (subject to the realization cap).
inline OrderSpectrum spectrum_of(const GroupSpec& s, i64 realize_cap = kDefaultRealizeCap) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic: return detail::cyclic_spectrum(s.n);
    case K::Symmetric: return detail::permutation_spectrum(s.n, false);
    case K::Alternating: return detail::permutation_spectrum(s.n, true);
    case K::DirectProduct: {
      OrderSpectrum acc = spectrum_of(s.factors[0], realize_cap);
      for (size_t i = 1; i < s.factors.size(); ++i)
        acc = detail::convolve_spectra(acc, spectrum_of(s.factors[i], realize_cap));
      return acc;
    }
    default: return tally_spectrum(realize(s, realize_cap));
  }
}

inline i64 exponent_of(const OrderSpectrum& sp) {
  i64 e = 1;
  for (i64 d : sp.support()) e = std::lcm<i64>(e, d);
  return e;
}

inline i64 exponent(const GroupSpec& s, i64 realize_cap = kDefaultRealizeCap) {
  return exponent_of(spectrum_of(s, realize_cap));
}

// pi(G): by Cauchy's theorem these are exactly the primes dividing |G|.
inline std::set<i64> prime_set_of(const OrderSpectrum& sp) {
  std::set<i64> ps;
  for (i64 d : sp.support())
    for (i64 p : prime_factors(d)) ps.insert(p);
  return ps;
}

inline std::set<i64> prime_set(const GroupSpec& s, i64 cap = kDefaultRealizeCap) {
  return prime_set_of(spectrum_of(s, cap));
}

// pi_e(G): the set of element orders, 1 included.
inline std::set<i64> element_order_set(const GroupSpec& s, i64 cap = kDefaultRealizeCap) {
  auto sup = spectrum_of(s, cap).support();
  return std::set<i64>(sup.begin(), sup.end());
}

inline bool is_p_group(const OrderSpectrum& sp) { return prime_set_of(sp).size() <= 1; }

inline bool is_eppo(const OrderSpectrum& sp) {
  for (i64 d : sp.support())
    if (!is_prime_power(d)) return false;
  return true;
}

inline bool is_epo(const OrderSpectrum& sp) {
  for (i64 d : sp.support())
    if (d != 1 && !is_prime(d)) return false;
  return true;
}

inline bool is_full_exponent(const OrderSpectrum& sp) {
  return sp.count(exponent_of(sp)) > 0;
}

// A group is cyclic iff it has an element of order |G|.
inline bool is_cyclic(const OrderSpectrum& sp) {
  for (i64 d : sp.support())
    if (BigInt(d) == sp.group_size) return true;
  return false;
}

inline bool is_p_group(const GroupSpec& s, i64 cap = kDefaultRealizeCap) { return is_p_group(spectrum_of(s, cap)); }
inline bool is_eppo(const GroupSpec& s, i64 cap = kDefaultRealizeCap) { return is_eppo(spectrum_of(s, cap)); }
inline bool is_epo(const GroupSpec& s, i64 cap = kDefaultRealizeCap) { return is_epo(spectrum_of(s, cap)); }
inline bool is_full_exponent(const GroupSpec& s, i64 cap = kDefaultRealizeCap) { return is_full_exponent(spectrum_of(s, cap)); }
inline bool is_cyclic(const GroupSpec& s, i64 cap = kDefaultRealizeCap) { return is_cyclic(spectrum_of(s, cap)); }

// JSON export: counts as decimal strings keyed by order, ascending.
inline nlohmann::ordered_json spectrum_to_json(const OrderSpectrum& sp) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [d, c] : sp.counts)
    if (c > 0) counts[std::to_string(d)] = to_decimal(c);
  nlohmann::ordered_json j;
  j["group_size"] = to_decimal(sp.group_size);
  j["counts"] = std::move(counts);
  return j;
}

}  // namespace gg
