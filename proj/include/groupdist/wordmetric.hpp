#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "groupdist/distance_matrix.hpp"
#include "groupdist/group.hpp"

namespace groupdist {

/// A set S that generates G. The search alphabet is S together with the
/// inverses of its elements.
class GeneratingSet {
 public:
  /// Throws DoesNotGenerate, reporting the size of the subgroup S reaches.
  static GeneratingSet validate(const FiniteGroup& g, std::vector<Element> generators);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<Element>& alphabet() const noexcept { return alphabet_; }
  /// Word length of each element, i.e. d_S(e, c).
  const std::vector<std::uint64_t>& lengths() const noexcept { return lengths_; }

 private:
  explicit GeneratingSet(FiniteGroup g) : group_(std::move(g)) {}

  FiniteGroup group_;
  std::vector<Element> generators_;
  std::vector<Element> alphabet_;
  std::vector<std::uint64_t> lengths_;
};

inline GeneratingSet validate_generates(const FiniteGroup& g, std::vector<Element> generators) {
  return GeneratingSet::validate(g, std::move(generators));
}

/// Lengths of shortest right-multiplication words x -> x * s over `alphabet`,
/// starting from the identity. Unreachable elements get UINT64_MAX.
std::vector<std::uint64_t> word_lengths(const FiniteGroup& g, const std::vector<Element>& alphabet);

/// Smallest k with b = a * s_1 * ... * s_k, s_i in S or S^-1.
std::uint64_t word_distance(const GeneratingSet& gs, Element a, Element b);
DistanceMatrix word_distance_table(const GeneratingSet& gs);

}  // namespace groupdist
