#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gg {

// Permutation of {0..degree-1}, stored as the image vector.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

inline bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

// (a ∘ b)(x) = a(b(x)); both must have equal degree.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline Perm perm_pad(Perm p, int degree) {
  int old = static_cast<int>(p.size());
  p.resize(degree);
  for (int i = old; i < degree; ++i) p[i] = i;
  return p;
}

// Multiset of cycle lengths, descending (fixed points included).
inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) { seen[j] = true; ++len; }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

inline bool perm_is_even(const Perm& p) {
  int transpositions = 0;
  for (int len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 == 0;
}

// Parses products of cycles in 1-based notation, e.g. "(1 2 3)(4 5)".
// The empty string and "()" both denote the identity.
inline Perm parse_cycles(const std::string& text, int degree = 0) {
  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("cycle notation: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start)
        throw std::invalid_argument("cycle notation: expected point at offset " + std::to_string(i));
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1) throw std::invalid_argument("cycle notation: points are 1-based");
      cyc.push_back(pt - 1);
      max_point = std::max(max_point, pt);
    }
    for (size_t a = 0; a < cyc.size(); ++a)
      for (size_t b = a + 1; b < cyc.size(); ++b)
        if (cyc[a] == cyc[b])
          throw std::invalid_argument("cycle notation: repeated point in cycle");
    if (!cyc.empty()) cycles.push_back(cyc);
    skip_ws();
  }
  int n = std::max(degree, std::max(max_point, 1));
  Perm p = perm_identity(n);
  for (auto& cyc : cycles)
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (p[cyc[k]] != cyc[k])
        throw std::invalid_argument("cycle notation: point appears in two cycles");
      p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  return p;
}

inline std::string format_cycles(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) { seen[i] = true; continue; }
    out += '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace gg
