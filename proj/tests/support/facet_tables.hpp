#pragma once

// Hand-checked table: the shaded complexes of <5,7,9> degree by degree, as
// downward closures of facet bitmask lists (bit 0 = generator 5, bit 1 =
// generator 7, bit 2 = generator 9).  Past theta = 34: the full triangle.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "nsgp/resolution.hpp"

namespace nsgp::test {

/// Downward closure of a facet list given as bitmasks.
inline std::set<std::uint64_t> facet_closure(
    const std::vector<std::uint64_t>& facets) {
  std::set<std::uint64_t> faces;
  for (std::uint64_t f : facets) {
    std::uint64_t sub = f;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return faces;
}

inline std::set<std::uint64_t> face_set(const ShadedComplex& c) {
  return {c.faces.begin(), c.faces.end()};
}

inline const std::map<Int, std::vector<std::uint64_t>>& facet_table_579() {
  static const std::map<Int, std::vector<std::uint64_t>> facets = {
      {0, {0}},        {5, {1}},        {7, {2}},        {9, {4}},
      {10, {1}},       {12, {3}},       {14, {5, 2}},    {15, {1}},
      {16, {6}},       {17, {3}},       {18, {4}},       {19, {3, 5}},
      {20, {1}},       {21, {7}},       {22, {3}},       {23, {5, 6}},
      {24, {3, 5}},    {25, {6, 1}},    {26, {7}},       {27, {3, 4}},
      {28, {7}},       {29, {3, 5}},    {30, {7}},       {31, {7}},
      {32, {3, 5, 6}}, {33, {7}},       {34, {3, 5, 6}},
  };
  return facets;
}

}  // namespace nsgp::test
