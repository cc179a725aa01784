#pragma once

// Published values for the quaternion-cross-cyclic construction, written in
// the generator words of atlas("Q8xZ<p>"). Shared by the unit and acceptance
// tests and the verification targets.

#include <string>
#include <utility>
#include <vector>

namespace haarlab::reference {

inline const char* const kQ8ZpConnectionSet = "1,a,c,abc^-1,bc";

/// S^-1 S for the set above when p >= 5.
inline const char* const kQ8ZpDifferenceSet =
    "1,a,c,abc^-1,bc,a^-1,a^-1c,bc^-1,a^-1bc,c^-1,ac^-1,abc^-2,b,b^-1c,a^-1bc^2,ac^2,b^-1c^-1,b^-1,"
    "a^-1c^-2";

struct NeighborRow {
  std::string neighbor;
  std::vector<std::string> beyond;  // Γ(neighbor) minus the centre
};

struct DistanceTwoTable {
  std::string centre;
  std::vector<NeighborRow> rows;
};

inline const std::vector<DistanceTwoTable> kQ8ZpDistanceTwo{
    {"1_0",
     {{"1_1", {"a^-1_0", "c^-1_0", "a^-1bc_0", "b^-1c^-1_0"}},
      {"a_1", {"a_0", "ac^-1_0", "b^-1c_0", "abc^-1_0"}},
      {"c_1", {"c_0", "a^-1c_0", "a^-1bc^2_0", "b^-1_0"}},
      {"abc^-1_1", {"abc^-1_0", "bc^-1_0", "abc^-2_0", "a^-1c^-2_0"}},
      {"bc_1", {"bc_0", "a^-1bc_0", "b_0", "ac^2_0"}}}},
    {"c_1",
     {{"c_0", {"ac_1", "c^2_1", "ab_1", "bc^2_1"}},
      {"a^-1c_0", {"a^-1c_1", "a^-1c^2_1", "b^-1_1", "abc^2_1"}},
      {"1_0", {"1_1", "a_1", "abc^-1_1", "bc_1"}},
      {"a^-1bc^2_0", {"a^-1bc^2_1", "bc^2_1", "a^-1bc^3_1", "a^-1c^3_1"}},
      {"b^-1_0", {"b^-1_1", "a^-1b_1", "b^-1c_1", "ac^-1_1"}}}}};

/// Neighborhoods of two further vertices.
inline const std::vector<std::pair<std::string, std::vector<std::string>>> kQ8ZpNeighborhoods{
    {"b^-1_1", {"b^-1_0", "ab_0", "b^-1c^-1_0", "a^-1c_0", "b^2c^-1_0"}},
    {"bc^2_1", {"bc^2_0", "a^-1bc^2_0", "bc_0", "ac^3_0", "c_0"}}};

}  // namespace haarlab::reference
