#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "groupdist/perm.hpp"

namespace groupdist {

/// How equal samples inside a window are ordered.
struct TiePolicy {
  enum class Kind { index_order, jitter };

  Kind kind = Kind::index_order;
  double amplitude = 0.0;
  std::uint64_t seed = 0;

  /// Earlier samples rank lower.
  static TiePolicy index_order() { return {}; }
  /// Uniform noise in (-amplitude, amplitude) from a generator seeded with `seed`.
  static TiePolicy jitter(double amplitude, std::uint64_t seed) { return {Kind::jitter, amplitude, seed}; }
};

struct OrdinalSeries {
  std::size_t degree = 0;
  std::vector<Permutation> patterns;

  std::size_t size() const noexcept { return patterns.size(); }
};

/// Rank vector of one window: the r with x[r_1] < x[r_2] < ... (0-based),
/// ties broken by position.
Permutation rank_vector(std::span<const double> window);

/// Ordinal patterns of every length-L window (time delay 1). Produces
/// N - L + 1 patterns; requires N >= L >= 2 and finite samples.
OrdinalSeries ordinal_encode(std::span<const double> series, std::size_t degree,
                             TiePolicy ties = TiePolicy::index_order());

std::map<Permutation, std::uint64_t> pattern_histogram(const OrdinalSeries& o);

/// One real per line, or a single-column CSV; blank lines and '#' comments skipped.
std::vector<double> read_real_series(std::istream& in);
std::vector<double> read_real_series_file(const std::string& path);
void write_real_series(std::ostream& out, std::span<const double> values, const std::string& header = {});

/// One pattern per line as a 1-based one-line form ("2 3 1 4").
void write_patterns(std::ostream& out, const OrdinalSeries& o);
OrdinalSeries read_patterns(std::istream& in);
OrdinalSeries read_patterns_file(const std::string& path);

}  // namespace groupdist
