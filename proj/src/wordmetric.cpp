#include "groupdist/wordmetric.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "groupdist/error.hpp"

namespace groupdist {

namespace {
constexpr auto kUnreached = std::numeric_limits<std::uint64_t>::max();
}

std::vector<std::uint64_t> word_lengths(const FiniteGroup& g, const std::vector<Element>& alphabet) {
  std::vector<std::uint64_t> dist(g.order(), kUnreached);
  std::queue<Element> frontier;
  dist[g.identity()] = 0;
  frontier.push(g.identity());
  while (!frontier.empty()) {
    const auto x = frontier.front();
    frontier.pop();
    for (auto s : alphabet) {
      const auto y = g.op_unchecked(x, s);
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

GeneratingSet GeneratingSet::validate(const FiniteGroup& g, std::vector<Element> generators) {
  if (generators.empty()) fail(ErrorCode::InvalidParameter, "generating set must be nonempty");
  for (auto s : generators) {
    if (s >= g.order()) {
      fail(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(s) + " outside group of order " +
                                           std::to_string(g.order()));
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::erase(generators, g.identity());
  if (generators.empty() && g.order() > 1) {
    fail(ErrorCode::DoesNotGenerate, "only the identity was given; it reaches 1 of " + std::to_string(g.order()) +
                                         " elements");
  }

  GeneratingSet gs(g);
  gs.generators_ = generators;
  gs.alphabet_ = generators;
  for (auto s : generators) gs.alphabet_.push_back(g.inv(s));
  std::sort(gs.alphabet_.begin(), gs.alphabet_.end());
  gs.alphabet_.erase(std::unique(gs.alphabet_.begin(), gs.alphabet_.end()), gs.alphabet_.end());

  gs.lengths_ = word_lengths(g, gs.alphabet_);
  const auto reached = static_cast<std::size_t>(
      std::count_if(gs.lengths_.begin(), gs.lengths_.end(), [](auto d) { return d != kUnreached; }));
  if (reached != g.order()) {
    std::string missing;
    for (Element c = 0; c < g.order(); ++c) {
      if (gs.lengths_[c] == kUnreached) missing += (missing.empty() ? "" : " ") + g.labels()[c];
    }
    fail(ErrorCode::DoesNotGenerate, "generated subgroup has order " + std::to_string(reached) + " of " +
                                         std::to_string(g.order()) + "; unreachable: " + missing);
  }
  return gs;
}

std::uint64_t word_distance(const GeneratingSet& gs, Element a, Element b) {
  const auto& g = gs.group();
  return gs.lengths()[g.op(g.inv(a), b)];
}

DistanceMatrix word_distance_table(const GeneratingSet& gs) {
  const auto& g = gs.group();
  const auto n = g.order();
  DistanceMatrix m;
  m.order = n;
  m.metric = "word";
  m.variant = "generators";
  m.labels = g.labels();
  for (auto s : gs.generators()) m.generators.push_back(g.labels()[s]);
  m.values.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    const auto a_inv = g.inv(a);
    for (Element b = 0; b < n; ++b) m.values[a * n + b] = gs.lengths()[g.op_unchecked(a_inv, b)];
  }
  m.admissible = distinct_values(gs.lengths());
  return m;
}

}  // namespace groupdist
