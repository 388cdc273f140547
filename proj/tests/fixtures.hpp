#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "groupdist/error.hpp"

namespace fixtures {

using Table = std::vector<std::vector<std::uint64_t>>;

// Rows and columns in the order 123, 132, 213, 231, 312, 321.
inline const Table kSym3Cayley = {
    {0, 1, 1, 2, 2, 1}, {1, 0, 2, 1, 1, 2}, {1, 2, 0, 1, 1, 2},
    {2, 1, 1, 0, 2, 1}, {2, 1, 1, 2, 0, 1}, {1, 2, 2, 1, 1, 0}};
inline const Table kSym3Kendall = {
    {0, 1, 1, 2, 2, 3}, {1, 0, 2, 3, 1, 2}, {1, 2, 0, 1, 3, 2},
    {2, 3, 1, 0, 2, 1}, {2, 1, 3, 2, 0, 1}, {3, 2, 2, 1, 1, 0}};
inline const Table kSym3EmbeddedCayley = {
    {0, 3, 3, 4, 4, 3}, {3, 0, 4, 3, 3, 4}, {3, 4, 0, 3, 3, 4},
    {4, 3, 3, 0, 4, 3}, {4, 3, 3, 4, 0, 3}, {3, 4, 4, 3, 3, 0}};
inline const Table kSym3EmbeddedKendall = {
    {0, 5, 5, 10, 10, 15}, {5, 0, 10, 15, 5, 10}, {5, 10, 0, 5, 15, 10},
    {10, 15, 5, 0, 10, 5}, {10, 5, 15, 10, 0, 5}, {15, 10, 10, 5, 5, 0}};

// Right-translation images, one-line, in the same element order.
inline const std::vector<std::vector<std::string>> kSym3RightImages = {
    {"123", "132", "213", "231", "312", "321"}, {"132", "123", "231", "213", "321", "312"},
    {"213", "312", "123", "321", "132", "231"}, {"312", "213", "321", "123", "231", "132"},
    {"231", "321", "132", "312", "123", "213"}, {"321", "231", "312", "132", "213", "123"}};

// Klein four-group, elements e, a, b, c.
inline const std::vector<std::vector<std::size_t>> kKleinTable = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
inline const Table kKleinCayley = {{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}};
inline const Table kKleinKendall = {{0, 2, 4, 6}, {2, 0, 6, 4}, {4, 6, 0, 2}, {6, 4, 2, 0}};

// Z4 with theta^1 as generator.
inline const Table kZ4Word = {{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}};
inline const Table kZ4EmbeddedKendall = {{0, 3, 4, 3}, {3, 0, 3, 4}, {4, 3, 0, 3}, {3, 4, 3, 0}};

// Order-5 loop: closed with identity and inverses, not associative.
inline const std::vector<std::vector<std::size_t>> kLoop5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

struct LabelledTable {
  std::vector<std::string> labels;
  Table values;
};

inline LabelledTable read_table(const std::string& name) {
  std::ifstream in(std::string(GROUPDIST_TEST_DATA) + "/" + name);
  LabelledTable t;
  std::string line;
  std::getline(in, line);
  std::istringstream header(line);
  std::string cell;
  std::getline(header, cell, ',');
  while (std::getline(header, cell, ',')) t.labels.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::getline(row, cell, ',');
    std::vector<std::uint64_t> values;
    while (std::getline(row, cell, ',')) values.push_back(std::stoull(cell));
    t.values.push_back(values);
  }
  return t;
}

template <class F>
groupdist::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const groupdist::Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return groupdist::ErrorCode::IoError;
}

}  // namespace fixtures
