#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace groupdist {

/// Symmetric n x n distance table with zero diagonal, labelled by element.
struct DistanceMatrix {
  std::size_t order = 0;
  std::string metric;   // "cayley", "kendall" or "word"
  std::string variant;  // embedding variant, "base" or "generators"
  std::vector<std::string> labels;
  std::vector<std::uint64_t> values;  // row-major
  /// Distinct values of the identity row, ascending.
  std::vector<std::uint64_t> admissible;
  /// Generator labels for word metrics.
  std::vector<std::string> generators;

  std::uint64_t at(std::size_t i, std::size_t j) const { return values[i * order + j]; }
  std::vector<std::vector<std::uint64_t>> rows() const;

  std::string to_csv() const;
  std::string to_json() const;
  static DistanceMatrix from_csv(const std::string& text);
  static DistanceMatrix from_json(const std::string& text);
};

/// Sorted distinct values of `row`.
std::vector<std::uint64_t> distinct_values(const std::vector<std::uint64_t>& row);

}  // namespace groupdist
