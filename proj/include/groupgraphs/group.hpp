#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/numtheory.hpp"
#include "groupgraphs/perm.hpp"
#include "groupgraphs/spec.hpp"

namespace gg {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr i64 kDefaultRealizeCap = 5000;

// A realized finite group: elements are indices 0..size-1, index 0 is the
// identity, multiplication is total. Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup(int size, std::function<int(int, int)> mul, std::string label)
      : size_(size), mul_(std::move(mul)), label_(std::move(label)) {
    if (size_ < 1) throw std::invalid_argument("group size must be >= 1");
    check_identity();
    compute_orders();
  }

  int size() const { return size_; }
  const std::string& label() const { return label_; }
  int multiply(int a, int b) const { return mul_(a, b); }
  i64 order_of(int g) const { return orders_[g]; }
  const std::vector<i64>& orders() const { return orders_; }

  int power(int g, i64 e) const {
    int acc = 0;
    for (i64 i = 0; i < e; ++i) acc = mul_(acc, g);
    return acc;
  }

  int inverse(int g) const {
    return power(g, orders_[g] - 1);
  }

  bool is_abelian() const {
    for (int a = 0; a < size_; ++a)
      for (int b = a + 1; b < size_; ++b)
        if (mul_(a, b) != mul_(b, a)) return false;
    return true;
  }

 private:
  void check_identity() const {
    for (int g = 0; g < size_; ++g)
      if (mul_(0, g) != g || mul_(g, 0) != g)
        throw std::logic_error("element 0 is not an identity");
  }

  void compute_orders() {
    orders_.resize(size_);
    for (int g = 0; g < size_; ++g) {
      i64 k = 1;
      int acc = g;
      while (acc != 0) { acc = mul_(acc, g); ++k; }
      orders_[g] = k;
    }
    if (orders_[0] != 1) throw std::logic_error("identity order mismatch");
  }

  int size_;
  std::function<int(int, int)> mul_;
  std::string label_;
  std::vector<i64> orders_;
};

namespace detail {

// Full associativity check up to 200 elements, deterministic sampling above.
inline void validate_associativity(int n, const std::function<int(int, int)>& mul) {
  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::logic_error("multiplication is not associative");
  };
  if (n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 3000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

inline FiniteGroup from_table(std::vector<int> table, int n, std::string label) {
  if (static_cast<i64>(table.size()) != static_cast<i64>(n) * n)
    throw std::invalid_argument("Cayley table has wrong shape");
  for (int v : table)
    if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");
  auto shared = std::make_shared<std::vector<int>>(std::move(table));
  auto mul = [shared, n](int a, int b) { return (*shared)[static_cast<size_t>(a) * n + b]; };
  validate_associativity(n, mul);
  return FiniteGroup(n, mul, std::move(label));
}

// Closure of a permutation generating set by breadth-first orbit enumeration.
// Discovery order is deterministic; the identity gets index 0.
inline FiniteGroup from_permutations(std::vector<Perm> gens, i64 cap, std::string label) {
  int degree = 1;
  for (auto& g : gens) degree = std::max(degree, static_cast<int>(g.size()));
  for (auto& g : gens) g = perm_pad(std::move(g), degree);

  auto elems = std::make_shared<std::vector<Perm>>();
  std::map<Perm, int> index;
  elems->push_back(perm_identity(degree));
  index[elems->front()] = 0;
  for (size_t head = 0; head < elems->size(); ++head) {
    Perm cur = (*elems)[head];  // copy: elems may reallocate
    for (const auto& g : gens) {
      Perm nxt = perm_compose(cur, g);
      if (index.emplace(nxt, static_cast<int>(elems->size())).second) {
        elems->push_back(std::move(nxt));
        if (static_cast<i64>(elems->size()) > cap)
          throw CapExceeded("generator closure exceeds size cap of " + std::to_string(cap));
      }
    }
  }
  auto idx = std::make_shared<std::map<Perm, int>>(std::move(index));
  auto mul = [elems, idx](int a, int b) {
    return idx->at(perm_compose((*elems)[a], (*elems)[b]));
  };
  return FiniteGroup(static_cast<int>(elems->size()), mul, std::move(label));
}

// All of S_n (or its even half) in lexicographic order; identity is first.
inline FiniteGroup symmetric_or_alternating(i64 n, bool alternating, std::string label) {
  auto elems = std::make_shared<std::vector<Perm>>();
  Perm p = perm_identity(static_cast<int>(n));
  do {
    if (!alternating || perm_is_even(p)) elems->push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto mul = [elems](int a, int b) {
    Perm prod = perm_compose((*elems)[a], (*elems)[b]);
    auto it = std::lower_bound(elems->begin(), elems->end(), prod);
    return static_cast<int>(it - elems->begin());
  };
  return FiniteGroup(static_cast<int>(elems->size()), mul, std::move(label));
}

inline FiniteGroup cyclic(i64 n, std::string label) {
  int m = static_cast<int>(n);
  auto mul = [m](int a, int b) { return (a + b) % m; };
  validate_associativity(m, mul);
  return FiniteGroup(m, mul, std::move(label));
}

// Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i.
inline FiniteGroup dihedral(i64 order, std::string label) {
  int n = static_cast<int>(order / 2);
  auto mul = [n](int a, int b) {
    bool ra = a >= n, rb = b >= n;
    int i = ra ? a - n : a, j = rb ? b - n : b;
    // (s^e r^i)(s^f r^j) = s^{e+f} r^{(-1)^f i + j}
    int i2 = rb ? (n - i) % n : i;
    int rot = (i2 + j) % n;
    return (ra ^ rb) ? n + rot : rot;
  };
  validate_associativity(2 * n, mul);
  return FiniteGroup(2 * n, mul, std::move(label));
}

// Indices encode (sign s, basis b) for {1,-1,i,-i,j,-j,k,-k} as 2b+s.
inline FiniteGroup quaternion8(std::string label) {
  // basis products with signs: table[b1][b2] = (sign, basis)
  static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[b1][b2]: i*i=-1, i*j=k, i*k=-j, j*i=-k, j*j=-1, j*k=i, k*i=j, k*j=-i, k*k=-1
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int b1 = x / 2, s1 = x % 2, b2 = y / 2, s2 = y % 2;
      int b = basis[b1][b2];
      int s = (s1 + s2 + sign[b1][b2]) % 2;
      table[x * 8 + y] = 2 * b + s;
    }
  return from_table(std::move(table), 8, std::move(label));
}

inline FiniteGroup elementary_abelian(i64 p, i64 k, std::string label) {
  i64 size = 1;
  for (i64 i = 0; i < k; ++i) size *= p;
  int n = static_cast<int>(size), pp = static_cast<int>(p), kk = static_cast<int>(k);
  auto mul = [n, pp, kk](int a, int b) {
    int r = 0, mult = 1;
    for (int i = 0; i < kk; ++i) {
      r += ((a % pp + b % pp) % pp) * mult;
      a /= pp; b /= pp; mult *= pp;
    }
    (void)n;
    return r;
  };
  validate_associativity(n, mul);
  return FiniteGroup(n, mul, std::move(label));
}

inline FiniteGroup direct_product(std::vector<FiniteGroup> comps, std::string label) {
  auto parts = std::make_shared<std::vector<FiniteGroup>>(std::move(comps));
  i64 size = 1;
  for (const auto& g : *parts) size *= g.size();
  int n = static_cast<int>(size);
  auto mul = [parts](int a, int b) {
    int r = 0, mult = 1;
    for (const auto& g : *parts) {
      int m = g.size();
      r += g.multiply(a % m, b % m) * mult;
      a /= m; b /= m; mult *= m;
    }
    return r;
  };
  return FiniteGroup(n, mul, std::move(label));
}

}  // namespace detail

// Predicted group size, exact. PermGenerators sizes are unknown before closure.
inline BigInt spec_group_size(const GroupSpec& s);

namespace detail {
inline BigInt catalog_order_size(i64 order) { return BigInt(order); }
}

inline BigInt spec_group_size(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::Cyclic: return BigInt(s.n);
    case K::Dihedral: return BigInt(s.n);
    case K::Quaternion8: return BigInt(8);
    case K::Symmetric: return big_factorial(static_cast<unsigned>(s.n));
    case K::Alternating: {
      BigInt f = big_factorial(static_cast<unsigned>(s.n));
      return s.n <= 2 ? BigInt(1) : f / 2;
    }
    case K::ElementaryAbelian: {
      BigInt r = 1;
      for (i64 i = 0; i < s.k; ++i) r *= s.p;
      return r;
    }
    case K::DirectProduct: {
      BigInt r = 1;
      for (const auto& f : s.factors) r *= spec_group_size(f);
      return r;
    }
    case K::Catalog: return detail::catalog_order_size(s.order);
    case K::PermGenerators: return BigInt(-1);
  }
  return BigInt(-1);
}

// Forward declaration; catalog.hpp supplies generators for Catalog specs.
// Translation units that realize Catalog specs must include catalog.hpp
// (the umbrella header groupgraphs.hpp does).
inline std::vector<Perm> catalog_generators(i64 order, i64 index);

// Realizes a symbolic group spec as a concrete FiniteGroup. Groups whose
// predicted size exceeds `cap` are rejected (use the spectrum path instead).
inline FiniteGroup realize(const GroupSpec& s, i64 cap = kDefaultRealizeCap) {
  using K = GroupSpec::Kind;
  BigInt predicted = spec_group_size(s);
  if (predicted >= 0 && predicted > cap)
    throw CapExceeded("group size " + predicted.str() + " exceeds cap " + std::to_string(cap));
  std::string label = s.to_string();
  switch (s.kind) {
    case K::Cyclic: return detail::cyclic(s.n, label);
    case K::Dihedral: return detail::dihedral(s.n, label);
    case K::Quaternion8: return detail::quaternion8(label);
    case K::Symmetric: return detail::symmetric_or_alternating(s.n, false, label);
    case K::Alternating: return detail::symmetric_or_alternating(s.n, true, label);
    case K::ElementaryAbelian: return detail::elementary_abelian(s.p, s.k, label);
    case K::DirectProduct: {
      std::vector<FiniteGroup> comps;
      for (const auto& f : s.factors) comps.push_back(realize(f, cap));
      return detail::direct_product(std::move(comps), label);
    }
    case K::Catalog:
      return detail::from_permutations(catalog_generators(s.order, s.index), cap, label);
    case K::PermGenerators:
      return detail::from_permutations(s.generators, cap, label);
  }
  throw std::logic_error("unreachable");
}

inline i64 element_order(const FiniteGroup& g, int elem) {
  if (elem < 0 || elem >= g.size()) throw std::out_of_range("element index out of range");
  return g.order_of(elem);
}

// ---- isomorphism testing (catalog bootstrapping only) ----

namespace detail {

inline std::vector<int> greedy_generating_set(const FiniteGroup& g) {
  int n = g.size();
  std::vector<char> have(n, false);
  have[0] = true;
  int have_count = 1;
  std::vector<int> gens;
  std::vector<int> cand(n);
  for (int i = 0; i < n; ++i) cand[i] = i;
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return g.order_of(a) > g.order_of(b); });
  while (have_count < n) {
    int best = -1, best_count = -1;
    std::vector<char> best_have;
    for (int c : cand) {
      if (have[c]) continue;
      std::vector<char> trial = have;
      std::vector<int> frontier{c};
      trial[c] = true;
      int cnt = have_count + 1;
      std::vector<int> members;
      for (int i = 0; i < n; ++i) if (trial[i]) members.push_back(i);
      while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (size_t mi = 0; mi < members.size(); ++mi) {
          int y = members[mi];
          for (int z : {g.multiply(x, y), g.multiply(y, x)}) {
            if (!trial[z]) {
              trial[z] = true;
              ++cnt;
              members.push_back(z);
              frontier.push_back(z);
            }
          }
        }
      }
      if (cnt > best_count) { best = c; best_count = cnt; best_have = trial; }
      if (cnt == n) break;
    }
    gens.push_back(best);
    have = best_have;
    have_count = best_count;
  }
  return gens;
}

inline bool extend_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                               const std::vector<int>& gens, const std::vector<int>& images) {
  int n = a.size();
  std::vector<int> mp(n, -1);
  std::vector<char> used(n, false);
  mp[0] = 0;
  used[0] = true;
  std::vector<int> frontier{0};
  int mapped = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = a.multiply(x, gens[gi]);
      int fy = b.multiply(mp[x], images[gi]);
      if (mp[y] >= 0) {
        if (mp[y] != fy) return false;
      } else {
        if (used[fy]) return false;  // not injective
        mp[y] = fy;
        used[fy] = true;
        ++mapped;
        frontier.push_back(y);
      }
    }
  }
  if (mapped != n) return false;
  // mp is a bijection compatible with generator multiplication; verify fully.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mp[a.multiply(x, y)] != b.multiply(mp[x], mp[y])) return false;
  return true;
}

}  // namespace detail

// Exact isomorphism test by generator-image backtracking. Intended for the
// small-group catalog (|G| <= 21); cost grows quickly beyond that.
inline bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.size() != b.size()) return false;
  std::vector<i64> oa = a.orders(), ob = b.orders();
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return false;
  if (a.is_abelian() != b.is_abelian()) return false;

  std::vector<int> gens = detail::greedy_generating_set(a);
  std::map<i64, std::vector<int>> by_order;
  for (int i = 0; i < b.size(); ++i) by_order[b.order_of(i)].push_back(i);

  std::vector<int> images(gens.size());
  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == gens.size()) return detail::extend_isomorphism(a, b, gens, images);
    for (int cand : by_order[a.order_of(gens[k])]) {
      images[k] = cand;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace gg
