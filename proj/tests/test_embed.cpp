#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "groupdist/embed.hpp"
#include "groupdist/error.hpp"

using namespace groupdist;
using fixtures::code_of;

namespace {

void check_matrix(const DistanceMatrix& m, const fixtures::Table& expected) {
  REQUIRE(m.order == expected.size());
  for (std::size_t i = 0; i < m.order; ++i) {
    for (std::size_t j = 0; j < m.order; ++j) {
      INFO("entry (" << m.labels[i] << ", " << m.labels[j] << ")");
      CHECK(m.at(i, j) == expected[i][j]);
    }
  }
}

// Same group with its elements listed in the order given by `order`.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<Element>& order) {
  const auto n = g.order();
  std::vector<Element> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(g.label(order[i]));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = pos[g.op(order[i], order[j])];
  }
  return FiniteGroup::from_table(labels, table);
}

std::vector<FiniteGroup> property_groups() {
  return {build_klein(), build_cyclic(4), build_cyclic(5), build_cyclic(6), build_symmetric(3),
          build_symmetric(4)};
}

}  // namespace

TEST_CASE("left and right images") {
  const auto s3 = build_symmetric(3);
  const auto left = CayleyEmbedding::embed(s3, EmbeddingVariant::left);
  const auto a = s3.parse_element("231");
  std::vector<std::string> row;
  for (auto x : left.image(a).images()) row.push_back(s3.label(x));
  CHECK(row == std::vector<std::string>{"231", "213", "321", "312", "123", "132"});

  const auto right = CayleyEmbedding::embed(s3, EmbeddingVariant::right);
  for (Element e = 0; e < 6; ++e) {
    std::vector<std::string> images;
    for (auto x : right.image(e).images()) images.push_back(s3.label(x));
    CHECK(images == fixtures::kSym3RightImages[e]);
  }

  const auto z4 = build_cyclic(4);
  const auto zr = CayleyEmbedding::embed(z4, EmbeddingVariant::right);
  const auto& r1 = zr.image(z4.parse_element("θ1"));
  CHECK(std::vector<Permutation::value_type>(r1.images().begin(), r1.images().end()) ==
        std::vector<Permutation::value_type>{3, 0, 1, 2});
}

TEST_CASE("homomorphism and injectivity") {
  for (const auto& g : property_groups()) {
    for (auto v : {EmbeddingVariant::left, EmbeddingVariant::right}) {
      const auto emb = CayleyEmbedding::embed(g, v);
      CHECK(emb.injective());
      for (Element a = 0; a < g.order(); ++a) {
        for (Element b = 0; b < g.order(); ++b) {
          REQUIRE(emb.image(g.op(a, b)) == compose(emb.image(a), emb.image(b)));
        }
      }
    }
  }
  const auto adj = CayleyEmbedding::embed(build_symmetric(3), EmbeddingVariant::adjoint);
  CHECK(adj.injective());

  CHECK(code_of([] { CayleyEmbedding::embed(build_klein(), EmbeddingVariant::adjoint); }) ==
        ErrorCode::AdjointNotInjective);
  CHECK(code_of([] { CayleyEmbedding::embed(build_cyclic(4), EmbeddingVariant::adjoint); }) ==
        ErrorCode::AdjointNotInjective);
  // Sym(4) has trivial center, so its adjoint action is faithful.
  CHECK(CayleyEmbedding::embed(build_symmetric(4), EmbeddingVariant::adjoint).injective());

  const auto bad = CayleyEmbedding::embed_unchecked(build_klein(), EmbeddingVariant::adjoint);
  CHECK(!bad.injective());
  CHECK(code_of([&] { group_distance(bad, Metric::kendall, 0, 1); }) == ErrorCode::InvalidEmbedding);
}

TEST_CASE("embedded Sym(3) tables") {
  const auto emb = CayleyEmbedding::embed(build_symmetric(3), EmbeddingVariant::left);
  check_matrix(distance_matrix(emb, Metric::cayley), fixtures::kSym3EmbeddedCayley);
  check_matrix(distance_matrix(emb, Metric::kendall), fixtures::kSym3EmbeddedKendall);

  const auto& g = emb.group();
  CHECK(group_distance(emb, Metric::kendall, g.parse_element("213"), g.parse_element("321")) == 10);
  CHECK(group_distance(emb, Metric::cayley, g.parse_element("213"), g.parse_element("321")) == 4);
  CHECK(admissible_distances(emb, Metric::kendall) == std::vector<std::uint64_t>{0, 5, 10, 15});
  CHECK(admissible_distances(emb, Metric::cayley) == std::vector<std::uint64_t>{0, 3, 4});
}

TEST_CASE("Klein and Z4 tables") {
  const auto klein = CayleyEmbedding::embed(build_klein(), EmbeddingVariant::left);
  check_matrix(distance_matrix(klein, Metric::cayley), fixtures::kKleinCayley);
  check_matrix(distance_matrix(klein, Metric::kendall), fixtures::kKleinKendall);
  CHECK(admissible_distances(klein, Metric::cayley) == std::vector<std::uint64_t>{0, 2});
  CHECK(forbidden_distances(klein, Metric::cayley) == std::vector<std::uint64_t>{1, 3});
  CHECK(admissible_distances(klein, Metric::kendall) == std::vector<std::uint64_t>{0, 2, 4, 6});
  CHECK(forbidden_distances(klein, Metric::kendall) == std::vector<std::uint64_t>{1, 3, 5});

  const auto z4 = build_cyclic(4);
  const auto left = CayleyEmbedding::embed(z4, EmbeddingVariant::left);
  const auto right = CayleyEmbedding::embed(z4, EmbeddingVariant::right);
  check_matrix(distance_matrix(left, Metric::kendall), fixtures::kZ4EmbeddedKendall);
  check_matrix(distance_matrix(right, Metric::kendall), fixtures::kZ4EmbeddedKendall);
  CHECK(group_distance(left, Metric::kendall, z4.parse_element("θ2"), z4.parse_element("θ3")) == 3);
}

TEST_CASE("embedded metrics satisfy the metric axioms") {
  for (const auto& g : property_groups()) {
    for (auto v : {EmbeddingVariant::left, EmbeddingVariant::right}) {
      const auto emb = CayleyEmbedding::embed(g, v);
      for (auto m : {Metric::cayley, Metric::kendall}) {
        const auto d = distance_matrix(emb, m);
        const auto n = g.order();
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            REQUIRE((d.at(a, b) == 0) == (a == b));
            REQUIRE(d.at(a, b) == d.at(b, a));
            REQUIRE(d.at(a, b) <= embedded_distance_bound(n, m));
            for (std::size_t c = 0; c < n; ++c) REQUIRE(d.at(a, b) <= d.at(a, c) + d.at(c, b));
          }
        }
      }
    }
  }
}

TEST_CASE("left embedding is left invariant") {
  for (const auto& g : property_groups()) {
    const auto emb = CayleyEmbedding::embed(g, EmbeddingVariant::left);
    const auto d = distance_matrix(emb, Metric::kendall);
    for (Element c = 0; c < g.order(); ++c) {
      for (Element a = 0; a < g.order(); ++a) {
        for (Element b = 0; b < g.order(); ++b) REQUIRE(d.at(g.op(c, a), g.op(c, b)) == d.at(a, b));
      }
    }
  }
}

TEST_CASE("relabeling covariance") {
  std::mt19937_64 rng(21);
  for (const auto& g : {build_klein(), build_cyclic(4)}) {
    const auto n = g.order();
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    for (int round = 0; round < 10; ++round) {
      std::shuffle(order.begin(), order.end(), rng);
      const auto h = relabel(g, order);
      // Relabeling conjugates every image by sigma: old position -> new position.
      std::vector<Permutation::value_type> pos(n);
      for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<Permutation::value_type>(i);
      const auto sigma = Permutation::from_images(pos);
      const auto eg = CayleyEmbedding::embed(g, EmbeddingVariant::left);
      const auto eh = CayleyEmbedding::embed(h, EmbeddingVariant::left);
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(eh.image(i) == compose(compose(sigma, eg.image(order[i])), inverse(sigma)));
      }
      for (auto m : {Metric::cayley, Metric::kendall}) {
        const auto dh = distance_matrix(eh, m);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const auto conj = [&](Element a) { return compose(compose(sigma, eg.image(a)), inverse(sigma)); };
            REQUIRE(dh.at(i, j) == distance(conj(order[i]), conj(order[j]), m));
          }
        }
      }
      // d_C is conjugation invariant, so Cayley tables are simply permuted.
      const auto cg = distance_matrix(eg, Metric::cayley);
      const auto ch = distance_matrix(eh, Metric::cayley);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) REQUIRE(ch.at(i, j) == cg.at(order[i], order[j]));
      }
    }
  }
}

TEST_CASE("parallel and serial tables agree") {
  const auto emb = CayleyEmbedding::embed(build_symmetric(4), EmbeddingVariant::left);
  for (auto m : {Metric::cayley, Metric::kendall}) {
    const auto serial = distance_matrix(emb, m, 1);
    CHECK(distance_matrix(emb, m, 3).values == serial.values);
    CHECK(distance_matrix(emb, m, 0).values == serial.values);
  }
}

TEST_CASE("base matrices and serialization") {
  const auto c = base_distance_matrix(3, Metric::cayley);
  check_matrix(c, fixtures::kSym3Cayley);
  CHECK(c.variant == "base");
  CHECK(c.labels.front() == "123");

  const auto k = base_distance_matrix(3, Metric::kendall);
  check_matrix(k, fixtures::kSym3Kendall);
  CHECK(DistanceMatrix::from_csv(k.to_csv()).values == k.values);
  const auto j = DistanceMatrix::from_json(k.to_json());
  CHECK(j.values == k.values);
  CHECK(j.labels == k.labels);
  CHECK(j.metric == "kendall");
}

TEST_CASE("scaling factors") {
  // smallest positive entry of the embedded Sym(3) Kendall table
  CHECK(scaling_factor(3) == 5u);
  CHECK(scaling_report(5).factor == 714u);
  const auto r4 = scaling_report(4);
  CHECK(r4.factor == 46u);
  CHECK(r4.pairs_checked == 576);
  CHECK(r4.failure.empty());
  CHECK(code_of([] { scaling_factor(6); }) == ErrorCode::Unsupported);
}
