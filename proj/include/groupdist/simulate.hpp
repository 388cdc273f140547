#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupdist/seriesmetrics.hpp"

namespace groupdist {

using State2 = std::array<double, 2>;

/// Unidirectionally coupled Hénon driver X and responder Y.
struct HenonConfig {
  double coupling = 0.0;
  std::size_t length = 10000;
  std::size_t transient = 1000;
  State2 driver_seed{0.0, 0.9};
  State2 responder_seed{0.75, 0.0};
  double divergence_bound = 1e6;

  void validate() const;
};

/// One iterate of the driver.
State2 henon_driver_step(const State2& x);
/// One iterate of the responder, driven by the current driver state.
State2 henon_responder_step(const State2& y, const State2& x, double coupling);

struct HenonSeries {
  std::vector<double> driver;     // first components x_t^(1)
  std::vector<double> responder;  // first components y_t^(1)
};

/// Iterates both maps, drops the first `transient` iterates and returns the
/// next `length` first components. Throws Diverged when a state component
/// leaves [-bound, bound].
HenonSeries henon_coupled(const HenonConfig& cfg);

enum class MetricKind { base, embedded };

struct ExperimentConfig {
  HenonConfig henon;
  std::size_t degree = 4;  // ordinal pattern length L, 3..6
  std::size_t window = 1;
  double p = 1.0;
  Metric metric = Metric::kendall;
  MetricKind kind = MetricKind::base;
  /// Defaults to round_half_up when the distances are real valued.
  std::optional<Binning> binning;

  void validate() const;
};

struct ExperimentResult {
  DistanceSeries distances;
  DistanceHistogram histogram;
};

/// Hénon series -> ordinal patterns -> (windowed) distances -> histogram.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace groupdist
