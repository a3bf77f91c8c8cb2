#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/catalog.hpp"
#include "groupgraphs/numtheory.hpp"

namespace gg {

// Element-order data for one sporadic simple group. These groups are never
// constructed here; the sets come from a shipped data file.
struct SporadicFixture {
  std::string name;
  BigInt order;
  std::set<i64> pi_e;
  std::set<i64> L;
};

// Embedded copy of data/sporadic_groups.json (a test keeps the two in sync).
inline const char* sporadic_fixture_data() {
  return R"FIX({
 "provenance": "Element-order sets and group orders transcribed from the ATLAS of Finite Groups (Conway et al.) and standard spectrum tables; this file is input data, not computed by the library.",
 "groups": [
  {"name": "M11", "order": "7920", "pi_e": [1, 2, 3, 4, 5, 6, 8, 11], "L": [5, 11]},
  {"name": "M12", "order": "95040", "pi_e": [1, 2, 3, 4, 5, 6, 8, 10, 11], "L": [11]},
  {"name": "M22", "order": "443520", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 11], "L": [5, 7, 11]},
  {"name": "M23", "order": "10200960", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23], "L": [11, 23]},
  {"name": "M24", "order": "244823040", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 21, 23], "L": [11, 23]},
  {"name": "J1", "order": "175560", "pi_e": [1, 2, 3, 5, 6, 7, 10, 11, 15, 19], "L": [7, 11, 19]},
  {"name": "J2", "order": "604800", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15], "L": [7]},
  {"name": "J3", "order": "50232960", "pi_e": [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 17, 19], "L": [17, 19]},
  {"name": "J4", "order": "86775571046077562880", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 16, 20, 21, 22, 23, 24, 28, 29, 30, 31, 33, 35, 37, 40, 42, 43, 44, 66], "L": [23, 29, 31, 37, 43]},
  {"name": "Co1", "order": "4157776806543360000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 21, 22, 23, 24, 26, 28, 30, 33, 35, 36, 39, 40, 42, 60], "L": [23]},
  {"name": "Co2", "order": "42305421312000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 23, 24, 28, 30], "L": [11, 23]},
  {"name": "Co3", "order": "495766656000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 18, 20, 21, 22, 23, 24, 30], "L": [23]},
  {"name": "Fi22", "order": "64561751654400", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 21, 22, 24, 30], "L": [13]},
  {"name": "Fi23", "order": "4089470473293004800", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 26, 27, 28, 30, 35, 36, 39, 42, 60], "L": [17, 23]},
  {"name": "Fi24'", "order": "1255205709190661721292800", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 26, 27, 28, 29, 30, 33, 35, 36, 39, 42, 45, 60], "L": [17, 23, 29]},
  {"name": "HS", "order": "44352000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 15, 20], "L": [7, 11]},
  {"name": "McL", "order": "898128000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 30], "L": [11]},
  {"name": "He", "order": "4030387200", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 15, 17, 21, 28], "L": [17]},
  {"name": "Ru", "order": "145926144000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 15, 16, 20, 24, 26, 29], "L": [29]},
  {"name": "Suz", "order": "448345497600", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 18, 20, 21, 24], "L": [11, 13]},
  {"name": "O'N", "order": "460815505920", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 16, 19, 20, 28, 31], "L": [11, 19, 31]},
  {"name": "HN", "order": "273030912000000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 19, 20, 21, 22, 25, 30, 35, 40], "L": [19]},
  {"name": "Ly", "order": "51765179004000000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 18, 21, 22, 24, 25, 28, 30, 31, 33, 37, 40, 42, 67], "L": [31, 37, 67]},
  {"name": "Th", "order": "90745943887872000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 18, 19, 20, 21, 24, 27, 28, 31, 36, 39], "L": [19, 31]},
  {"name": "B", "order": "4154781481226426191177580544000000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 30, 31, 32, 33, 34, 35, 36, 38, 39, 40, 42, 44, 46, 47, 48, 52, 55, 56, 60, 66, 70], "L": [31, 47]},
  {"name": "M", "order": "808017424794512875886459904961710757005754368000000000", "pi_e": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 38, 39, 40, 41, 42, 44, 45, 46, 47, 48, 50, 51, 52, 54, 55, 56, 57, 59, 60, 62, 66, 68, 69, 70, 71, 78, 84, 87, 88, 92, 93, 94, 95, 104, 105, 110, 119], "L": [41, 59, 71]}
 ]
}
)FIX";
}

inline std::vector<SporadicFixture> parse_sporadic_fixtures(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("sporadic fixture: invalid JSON: ") + e.what());
  }
  if (!doc.contains("groups") || !doc["groups"].is_array())
    throw DataError("sporadic fixture: missing 'groups' array");
  std::vector<SporadicFixture> out;
  for (const auto& rec : doc["groups"]) {
    SporadicFixture f;
    try {
      f.name = rec.at("name").get<std::string>();
      f.order = big_from_decimal(rec.at("order").get<std::string>());
      for (i64 d : rec.at("pi_e").get<std::vector<i64>>()) f.pi_e.insert(d);
      for (i64 d : rec.at("L").get<std::vector<i64>>()) f.L.insert(d);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("sporadic fixture: bad record: ") + e.what());
    }
    if (!f.pi_e.count(1))
      throw DataError("sporadic fixture " + f.name + ": pi_e must contain 1");
    for (i64 d : f.pi_e)
      if (d < 1 || f.order % d != 0)
        throw DataError("sporadic fixture " + f.name + ": order " + std::to_string(d) +
                        " does not divide |G|");
    for (i64 l : f.L)
      if (!f.pi_e.count(l) || l == 1)
        throw DataError("sporadic fixture " + f.name + ": L is not a subset of pi_e minus {1}");
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<SporadicFixture> load_sporadic_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open fixture file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sporadic_fixtures(ss.str());
}

inline const std::vector<SporadicFixture>& builtin_sporadic_fixtures() {
  static const std::vector<SporadicFixture> fixtures =
      parse_sporadic_fixtures(sporadic_fixture_data());
  return fixtures;
}

}  // namespace gg
