#include "groupdist/simulate.hpp"

#include <cmath>

#include "groupdist/error.hpp"

namespace groupdist {

void HenonConfig::validate() const {
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
    fail(ErrorCode::InvalidParameter, "coupling strength must be a nonnegative real");
  }
  if (length < 1) fail(ErrorCode::InvalidParameter, "series length must be at least 1");
  if (!(divergence_bound > 0.0)) fail(ErrorCode::InvalidParameter, "divergence bound must be positive");
  for (double v : {driver_seed[0], driver_seed[1], responder_seed[0], responder_seed[1]}) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidParameter, "seeds must be finite");
  }
}

State2 henon_driver_step(const State2& x) { return {1.4 - x[0] * x[0] + 0.1 * x[1], x[0]}; }

State2 henon_responder_step(const State2& y, const State2& x, double coupling) {
  return {1.4 - (coupling * x[0] * y[0] + (1.0 - coupling) * y[0] * y[0]) + 0.3 * y[1], y[0]};
}

HenonSeries henon_coupled(const HenonConfig& cfg) {
  cfg.validate();
  HenonSeries out;
  out.driver.reserve(cfg.length);
  out.responder.reserve(cfg.length);
  State2 x = cfg.driver_seed;
  State2 y = cfg.responder_seed;
  const std::size_t steps = cfg.transient + cfg.length;
  for (std::size_t t = 1; t <= steps; ++t) {
    const auto y_next = henon_responder_step(y, x, cfg.coupling);
    x = henon_driver_step(x);
    y = y_next;
    for (double v : {x[0], x[1], y[0], y[1]}) {
      if (!(std::abs(v) <= cfg.divergence_bound)) {
        fail(ErrorCode::Diverged, "trajectory left the bound " + std::to_string(cfg.divergence_bound) +
                                      " at iterate " + std::to_string(t));
      }
    }
    if (t > cfg.transient) {
      out.driver.push_back(x[0]);
      out.responder.push_back(y[0]);
    }
  }
  return out;
}

void ExperimentConfig::validate() const {
  henon.validate();
  if (degree < 3 || degree > 6) fail(ErrorCode::InvalidParameter, "pattern length L must be in 3..6");
  if (window < 1) fail(ErrorCode::InvalidParameter, "window size must be at least 1");
  if (!(p >= 1.0)) fail(ErrorCode::InvalidParameter, "exponent p must be >= 1");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto series = henon_coupled(cfg.henon);
  const auto alpha = GroupSeries::of_patterns(ordinal_encode(series.driver, cfg.degree));
  const auto beta = GroupSeries::of_patterns(ordinal_encode(series.responder, cfg.degree));

  DistanceProviderPtr metric;
  if (cfg.kind == MetricKind::base) {
    metric = make_base_metric(cfg.degree, cfg.metric);
  } else {
    metric = make_embedded_metric(
        CayleyEmbedding::embed(build_symmetric(cfg.degree), EmbeddingVariant::left), cfg.metric);
  }

  ExperimentResult result;
  result.distances = windowed_distances(alpha, beta, *metric, cfg.window, cfg.p);
  const auto binning =
      cfg.binning.value_or(result.distances.integral() ? Binning::exact : Binning::round_half_up);

  std::optional<std::vector<double>> support;
  if (cfg.window == 1) {
    std::vector<double> values;
    if (auto admissible = metric->admissible()) {
      for (auto v : *admissible) values.push_back(static_cast<double>(v));
    } else {
      for (std::uint64_t v = 0; v <= metric->max_bound(); ++v) values.push_back(static_cast<double>(v));
    }
    support = std::move(values);
  }
  result.histogram = histogram(result.distances, binning, support);
  return result;
}

}  // namespace groupdist
