#include "groupdist/ordinal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>

#include "groupdist/error.hpp"

namespace groupdist {

Permutation rank_vector(std::span<const double> window) {
  std::vector<Permutation::value_type> order(window.size());
  std::iota(order.begin(), order.end(), Permutation::value_type{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return window[i] < window[j]; });
  return Permutation::from_images(std::move(order));
}

OrdinalSeries ordinal_encode(std::span<const double> series, std::size_t degree, TiePolicy ties) {
  if (degree < 2) fail(ErrorCode::InvalidParameter, "pattern length must be at least 2");
  if (series.size() < degree) {
    fail(ErrorCode::SeriesTooShort, "series of length " + std::to_string(series.size()) +
                                        " is shorter than the pattern length " + std::to_string(degree));
  }
  for (std::size_t t = 0; t < series.size(); ++t) {
    if (!std::isfinite(series[t])) fail(ErrorCode::InvalidSample, "sample " + std::to_string(t + 1) + " is not finite");
  }

  std::vector<double> values(series.begin(), series.end());
  if (ties.kind == TiePolicy::Kind::jitter) {
    if (!(ties.amplitude > 0.0) || !std::isfinite(ties.amplitude)) {
      fail(ErrorCode::InvalidParameter, "jitter amplitude must be positive");
    }
    std::mt19937_64 rng(ties.seed);
    std::uniform_real_distribution<double> noise(-ties.amplitude, ties.amplitude);
    for (auto& v : values) {
      double e = noise(rng);
      while (e == -ties.amplitude) e = noise(rng);
      v += e;
    }
  }

  OrdinalSeries out;
  out.degree = degree;
  out.patterns.reserve(values.size() - degree + 1);
  for (std::size_t t = 0; t + degree <= values.size(); ++t) {
    out.patterns.push_back(rank_vector(std::span<const double>(values).subspan(t, degree)));
  }
  return out;
}

std::map<Permutation, std::uint64_t> pattern_histogram(const OrdinalSeries& o) {
  std::map<Permutation, std::uint64_t> counts;
  for (const auto& p : o.patterns) ++counts[p];
  return counts;
}

std::vector<double> read_real_series(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r,");
    const std::string_view cell(line.data() + first, last - first + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
      // A non-numeric first line is a CSV header.
      if (out.empty() && lineno == 1) continue;
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected one real, got '" +
                                      std::string(cell) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> read_real_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_real_series(in);
}

void write_real_series(std::ostream& out, std::span<const double> values, const std::string& header) {
  if (!header.empty()) out << header << '\n';
  out << std::setprecision(17);
  for (double v : values) out << v << '\n';
}

void write_patterns(std::ostream& out, const OrdinalSeries& o) {
  for (const auto& p : o.patterns) out << p.to_string() << '\n';
}

OrdinalSeries read_patterns(std::istream& in) {
  OrdinalSeries out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    auto p = Permutation::parse(line);
    if (out.patterns.empty()) {
      out.degree = p.degree();
    } else if (p.degree() != out.degree) {
      fail(ErrorCode::DegreeMismatch, "pattern file mixes degrees " + std::to_string(out.degree) + " and " +
                                          std::to_string(p.degree()));
    }
    out.patterns.push_back(std::move(p));
  }
  return out;
}

OrdinalSeries read_patterns_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_patterns(in);
}

}  // namespace groupdist
