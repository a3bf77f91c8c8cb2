#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupgraphs/group.hpp"
#include "groupgraphs/perm.hpp"
#include "groupgraphs/spec.hpp"

namespace gg {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  i64 order = 0;
  i64 index = 0;           // 1-based within each order
  std::string name;        // conventional structure name
  std::vector<Perm> generators;
};

constexpr i64 kCatalogMaxOrder = 21;

// Embedded copy of data/small_groups.dat (a test keeps the two in sync).
inline const char* small_groups_data() {
  return R"(# small finite group catalog, one isomorphism type per line
# format: order index name | permutation generators (1-based cycles, comma separated)
# index is 1-based within each order; names are conventional structure names
1 1 1 |
2 1 Z2 | (1 2)
3 1 Z3 | (1 2 3)
4 1 Z4 | (1 2 3 4)
4 2 Z2xZ2 | (1 2),(3 4)
5 1 Z5 | (1 2 3 4 5)
6 1 Z6 | (1 2 3 4 5 6)
6 2 S3 | (1 2 3),(1 2)
7 1 Z7 | (1 2 3 4 5 6 7)
8 1 Z8 | (1 2 3 4 5 6 7 8)
8 2 Z4xZ2 | (1 2 3 4),(5 6)
8 3 Z2^3 | (1 2),(3 4),(5 6)
8 4 D8 | (1 2 3 4),(2 4)
8 5 Q8 | (1 3 2 4)(5 7 6 8),(1 5 2 6)(3 8 4 7)
9 1 Z9 | (1 2 3 4 5 6 7 8 9)
9 2 Z3xZ3 | (1 2 3),(4 5 6)
10 1 Z10 | (1 2 3 4 5 6 7 8 9 10)
10 2 D10 | (1 2 3 4 5),(2 5)(3 4)
11 1 Z11 | (1 2 3 4 5 6 7 8 9 10 11)
12 1 Z12 | (1 2 3 4 5 6 7 8 9 10 11 12)
12 2 Z6xZ2 | (1 2 3 4 5 6),(7 8)
12 3 D12 | (1 2 3 4 5 6),(2 6)(3 5)
12 4 A4 | (1 2 3),(2 3 4)
12 5 Dic3 | (1 2 3),(2 3)(4 5 6 7)
13 1 Z13 | (1 2 3 4 5 6 7 8 9 10 11 12 13)
14 1 Z14 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14)
14 2 D14 | (1 2 3 4 5 6 7),(2 7)(3 6)(4 5)
15 1 Z15 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)
16 1 Z16 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16)
16 2 Z8xZ2 | (1 2 3 4 5 6 7 8),(9 10)
16 3 Z4xZ4 | (1 2 3 4),(5 6 7 8)
16 4 Z4xZ2^2 | (1 2 3 4),(5 6),(7 8)
16 5 Z2^4 | (1 2),(3 4),(5 6),(7 8)
16 6 D16 | (1 2 3 4 5 6 7 8),(2 8)(3 7)(4 6)
16 7 SD16 | (1 2 3 4 5 6 7 8),(2 4)(3 7)(6 8)
16 8 Q16 | (1 2 3 4 5 6 7 8)(9 10 11 12 13 14 15 16),(1 9 5 13)(2 16 6 12)(3 15 7 11)(4 14 8 10)
16 9 M4(2) | (1 2 3 4 5 6 7 8),(2 6)(4 8)
16 10 D8xZ2 | (1 2 3 4),(2 4),(5 6)
16 11 Q8xZ2 | (1 3 2 4)(5 7 6 8),(1 5 2 6)(3 8 4 7),(9 10)
16 12 Z4:Z4 | (1 2 3 4),(2 4)(5 6 7 8)
16 13 (Z2xZ2):Z4 | (1 2),(3 4),(1 3)(2 4)(5 6 7 8)
16 14 Z4oD8 | (1 2 3 4)(5 6 7 8),(1 5)(2 6)(3 7)(4 8),(5 7)(6 8)
17 1 Z17 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17)
18 1 Z18 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18)
18 2 Z6xZ3 | (1 2 3 4 5 6),(7 8 9)
18 3 D18 | (1 2 3 4 5 6 7 8 9),(2 9)(3 8)(4 7)(5 6)
18 4 Z3xS3 | (1 2 3),(4 5 6),(4 5)
18 5 (Z3xZ3):Z2 | (1 2 3),(4 5 6),(2 3)(5 6)
19 1 Z19 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19)
20 1 Z20 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20)
20 2 Z10xZ2 | (1 2 3 4 5 6 7 8 9 10),(11 12)
20 3 D20 | (1 2 3 4 5 6 7 8 9 10),(2 10)(3 9)(4 8)(5 7)
20 4 F20 | (1 2 3 4 5),(2 3 5 4)
20 5 Dic5 | (1 2 3 4 5),(2 5)(3 4)(6 7 8 9)
21 1 Z21 | (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21)
21 2 Z7:Z3 | (1 2 3 4 5 6 7),(2 3 5)(4 7 6)
)";
}

// Parses catalog records from the data-file format: "order index name | gens".
inline std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    if (bar == std::string::npos)
      throw DataError("catalog line " + std::to_string(lineno) + ": missing '|'");
    std::istringstream head(line.substr(0, bar));
    CatalogEntry e;
    if (!(head >> e.order >> e.index >> e.name))
      throw DataError("catalog line " + std::to_string(lineno) + ": bad header fields");
    std::string gens = line.substr(bar + 1);
    std::istringstream glist(gens);
    std::string one;
    while (std::getline(glist, one, ',')) {
      if (one.find('(') == std::string::npos) continue;
      e.generators.push_back(parse_cycles(one));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

inline std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open catalog file: " + path);
  return parse_catalog(in);
}

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::istringstream in(small_groups_data());
    return parse_catalog(in);
  }();
  return entries;
}

inline const CatalogEntry& catalog_entry(i64 order, i64 index) {
  if (order < 1 || order > kCatalogMaxOrder)
    throw std::out_of_range("catalog order out of supported range 1..21: " +
                            std::to_string(order));
  for (const auto& e : builtin_catalog())
    if (e.order == order && e.index == index) return e;
  throw std::out_of_range("catalog id SG(" + std::to_string(order) + "," +
                          std::to_string(index) + ") does not exist");
}

// Satisfies the forward declaration in group.hpp.
inline std::vector<Perm> catalog_generators(i64 order, i64 index) {
  return catalog_entry(order, index).generators;
}

// All isomorphism types of groups of the given order (1..21), as specs.
inline std::vector<GroupSpec> small_group_catalog(i64 order) {
  if (order < 1 || order > kCatalogMaxOrder)
    throw std::out_of_range("catalog order out of supported range 1..21: " +
                            std::to_string(order));
  std::vector<GroupSpec> specs;
  for (const auto& e : builtin_catalog())
    if (e.order == order) specs.push_back(GroupSpec::catalog(e.order, e.index));
  return specs;
}

inline std::string catalog_name(i64 order, i64 index) {
  return catalog_entry(order, index).name;
}

}  // namespace gg
