#include "groupdist/embed.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "groupdist/error.hpp"

namespace groupdist {

std::string_view to_string(EmbeddingVariant v) noexcept {
  switch (v) {
    case EmbeddingVariant::left: return "left";
    case EmbeddingVariant::right: return "right";
    case EmbeddingVariant::adjoint: return "adjoint";
  }
  return "left";
}

EmbeddingVariant parse_variant(std::string_view name) {
  if (name == "left") return EmbeddingVariant::left;
  if (name == "right") return EmbeddingVariant::right;
  if (name == "adjoint") return EmbeddingVariant::adjoint;
  fail(ErrorCode::ParseError, "unknown embedding variant '" + std::string(name) + "'");
}

namespace {

void verify_homomorphism(const FiniteGroup& g, const std::vector<Permutation>& images) {
  const auto n = g.order();
  auto check = [&](Element a, Element b) {
    if (images[g.op_unchecked(a, b)] != compose(images[a], images[b])) {
      fail(ErrorCode::InvalidEmbedding,
           "homomorphism property fails at (" + g.labels()[a] + ", " + g.labels()[b] + ")");
    }
  };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) check(a, b);
    }
    return;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  for (int i = 0; i < 1000; ++i) check(pick(rng), pick(rng));
}

}  // namespace

CayleyEmbedding CayleyEmbedding::embed_unchecked(const FiniteGroup& g, EmbeddingVariant variant) {
  CayleyEmbedding emb(g, variant);
  const auto n = g.order();
  emb.images_.reserve(n);
  std::vector<Permutation::value_type> images(n);
  for (Element a = 0; a < n; ++a) {
    const auto a_inv = g.inv(a);
    for (Element b = 0; b < n; ++b) {
      Element target = 0;
      switch (variant) {
        case EmbeddingVariant::left: target = g.op_unchecked(a, b); break;
        case EmbeddingVariant::right: target = g.op_unchecked(b, a_inv); break;
        case EmbeddingVariant::adjoint: target = g.op_unchecked(g.op_unchecked(a, b), a_inv); break;
      }
      images[b] = static_cast<Permutation::value_type>(target);
    }
    emb.images_.push_back(Permutation::from_images(images));
  }
  if (!emb.images_[g.identity()].is_identity()) {
    fail(ErrorCode::InvalidEmbedding, "identity does not map to the identity permutation");
  }
  verify_homomorphism(g, emb.images_);

  const std::set<Permutation> distinct(emb.images_.begin(), emb.images_.end());
  emb.injective_ = distinct.size() == n;
  return emb;
}

CayleyEmbedding CayleyEmbedding::embed(const FiniteGroup& g, EmbeddingVariant variant) {
  auto emb = embed_unchecked(g, variant);
  if (!emb.injective_) {
    fail(ErrorCode::AdjointNotInjective,
         "adjoint action of " + g.name() + " is not injective (nontrivial center); it cannot back a distance");
  }
  return emb;
}

const Permutation& CayleyEmbedding::image(Element a) const {
  if (a >= images_.size()) {
    fail(ErrorCode::IndexOutOfRange,
         "element index " + std::to_string(a) + " outside group of order " + std::to_string(images_.size()));
  }
  return images_[a];
}

std::uint64_t group_distance(const CayleyEmbedding& emb, Metric metric, Element a, Element b) {
  if (!emb.injective()) {
    fail(ErrorCode::InvalidEmbedding, "embedding is not injective; distances would violate positivity");
  }
  return distance(emb.image(a), emb.image(b), metric);
}

std::uint64_t embedded_distance_bound(std::size_t order, Metric metric) noexcept {
  return max_distance(order, metric);
}

DistanceMatrix distance_matrix(const CayleyEmbedding& emb, Metric metric, unsigned threads) {
  if (!emb.injective()) {
    fail(ErrorCode::InvalidEmbedding, "embedding is not injective; distances would violate positivity");
  }
  const auto& g = emb.group();
  const auto n = g.order();
  if (n > kMaxMaterializedOrder) {
    fail(ErrorCode::Unsupported, "distance matrices are materialized only up to order " +
                                     std::to_string(kMaxMaterializedOrder));
  }
  DistanceMatrix m;
  m.order = n;
  m.metric = std::string(to_string(metric));
  m.variant = std::string(to_string(emb.variant()));
  m.labels = g.labels();
  m.values.assign(n * n, 0);

  // Each row writes only its own upper-triangle slots, so rows need no locking.
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) m.values[i * n + j] = distance(emb.images()[i], emb.images()[j], metric);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += threads) fill_row(i);
      });
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m.values[i * n + j] = m.values[j * n + i];
  }

  const auto e = g.identity();
  m.admissible = distinct_values({m.values.begin() + static_cast<std::ptrdiff_t>(e * n),
                                  m.values.begin() + static_cast<std::ptrdiff_t>((e + 1) * n)});
  return m;
}

std::vector<std::uint64_t> admissible_distances(const CayleyEmbedding& emb, Metric metric) {
  const auto& g = emb.group();
  std::vector<std::uint64_t> row;
  row.reserve(g.order());
  for (Element c = 0; c < g.order(); ++c) row.push_back(group_distance(emb, metric, g.identity(), c));
  return distinct_values(row);
}

std::vector<std::uint64_t> forbidden_distances(const CayleyEmbedding& emb, Metric metric) {
  const auto allowed = admissible_distances(emb, metric);
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v <= embedded_distance_bound(emb.group().order(), metric); ++v) {
    if (!std::binary_search(allowed.begin(), allowed.end(), v)) out.push_back(v);
  }
  return out;
}

DistanceMatrix base_distance_matrix(std::size_t degree, Metric metric) {
  const auto perms = enumerate_sym(degree);
  const auto n = perms.size();
  DistanceMatrix m;
  m.order = n;
  m.metric = std::string(to_string(metric));
  m.variant = "base";
  for (const auto& p : perms) m.labels.push_back(p.compact());
  m.values.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.values[i * n + j] = distance(perms[i], perms[j], metric);
  }
  m.admissible = distinct_values({m.values.begin(), m.values.begin() + static_cast<std::ptrdiff_t>(n)});
  return m;
}

ScalingReport scaling_report(std::size_t degree) {
  if (degree < 3 || degree > 5) {
    fail(ErrorCode::Unsupported, "the scaling relation is established only for 3 <= L <= 5, got " +
                                     std::to_string(degree));
  }
  ScalingReport report;
  report.degree = degree;
  const auto g = build_symmetric(degree);
  const auto emb = CayleyEmbedding::embed(g, EmbeddingVariant::left);
  const auto perms = enumerate_sym(degree);
  const auto n = perms.size();

  std::vector<std::uint64_t> embedded(n * n), base(n * n);
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      embedded[i * n + j] = kendall_distance(emb.images()[i], emb.images()[j]);
      base[i * n + j] = kendall_distance(perms[i], perms[j]);
      if (embedded[i * n + j] > 0 && (k == 0 || embedded[i * n + j] < k)) k = embedded[i * n + j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.pairs_checked;
      if (embedded[i * n + j] != k * base[i * n + j]) {
        report.failure = perms[i].compact() + " " + perms[j].compact() + ": embedded " +
                         std::to_string(embedded[i * n + j]) + " vs " + std::to_string(k) + " * " +
                         std::to_string(base[i * n + j]);
        return report;
      }
    }
  }
  report.factor = k;
  return report;
}

std::optional<std::uint64_t> scaling_factor(std::size_t degree) { return scaling_report(degree).factor; }

}  // namespace groupdist
