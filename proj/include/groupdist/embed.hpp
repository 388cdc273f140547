#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupdist/distance_matrix.hpp"
#include "groupdist/group.hpp"
#include "groupdist/perm.hpp"

namespace groupdist {

/// Which action of G on itself realizes Cayley's isomorphism.
enum class EmbeddingVariant {
  left,     // b -> a * b
  right,    // b -> b * a^-1
  adjoint,  // b -> a * b * a^-1
};

std::string_view to_string(EmbeddingVariant v) noexcept;
EmbeddingVariant parse_variant(std::string_view name);

/// Images Phi(a_i) in Sym(|G|), indexed by element position. The
/// homomorphism property images[a*b] = images[a] o images[b] is verified at
/// construction (exhaustively for |G| <= 64, on 1000 random pairs otherwise).
class CayleyEmbedding {
 public:
  /// Throws AdjointNotInjective if the adjoint images collide (the kernel of
  /// the adjoint action is the center, so this happens for every abelian group).
  static CayleyEmbedding embed(const FiniteGroup& g, EmbeddingVariant variant);
  /// As embed(), but keeps a non-injective adjoint embedding. Distances on it
  /// throw InvalidEmbedding.
  static CayleyEmbedding embed_unchecked(const FiniteGroup& g, EmbeddingVariant variant);

  const FiniteGroup& group() const noexcept { return group_; }
  EmbeddingVariant variant() const noexcept { return variant_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }
  const Permutation& image(Element a) const;
  bool injective() const noexcept { return injective_; }

 private:
  CayleyEmbedding(FiniteGroup g, EmbeddingVariant v) : group_(std::move(g)), variant_(v) {}

  FiniteGroup group_;
  EmbeddingVariant variant_;
  std::vector<Permutation> images_;
  bool injective_ = true;
};

/// D(a, b) = d(Phi(a), Phi(b)).
std::uint64_t group_distance(const CayleyEmbedding& emb, Metric metric, Element a, Element b);

inline constexpr std::size_t kMaxMaterializedOrder = 720;

/// Full table of group_distance; rows are computed in parallel when
/// `threads` != 1 (0 picks the hardware concurrency). Output does not depend
/// on the thread count.
DistanceMatrix distance_matrix(const CayleyEmbedding& emb, Metric metric, unsigned threads = 0);

/// {D(e, c) : c in G}, ascending.
std::vector<std::uint64_t> admissible_distances(const CayleyEmbedding& emb, Metric metric);
/// Values in {0..bound} that no pair realizes, where bound is |G|-1 for Cayley
/// and |G|(|G|-1)/2 for Kendall.
std::vector<std::uint64_t> forbidden_distances(const CayleyEmbedding& emb, Metric metric);
std::uint64_t embedded_distance_bound(std::size_t order, Metric metric) noexcept;

/// Base metric over Sym(L) in lexicographic order, 1 <= L <= 8.
DistanceMatrix base_distance_matrix(std::size_t degree, Metric metric);

struct ScalingReport {
  std::size_t degree = 0;
  std::optional<std::uint64_t> factor;
  std::size_t pairs_checked = 0;
  /// First pair (as one-line forms) breaking proportionality, if any.
  std::string failure;
};

/// Checks D_K under left translations against k * d_K over all pairs of
/// Sym(L), k being the smallest positive embedded distance. Only 3 <= L <= 5.
ScalingReport scaling_report(std::size_t degree);
std::optional<std::uint64_t> scaling_factor(std::size_t degree);

}  // namespace groupdist
