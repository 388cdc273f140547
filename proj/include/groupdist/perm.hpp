#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace groupdist {

enum class Metric { cayley, kendall };

std::string_view to_string(Metric m) noexcept;
Metric parse_metric(std::string_view name);

/// Bijection of {0..L-1}, stored 0-based. One-line forms at the I/O boundary
/// are 1-based: the one-line form "2 3 1" maps 1->2, 2->3, 3->1.
class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;

  static Permutation identity(std::size_t degree);
  /// The order-reversing permutation L, L-1, ..., 1.
  static Permutation reversal(std::size_t degree);
  /// Takes 0-based images; throws InvalidPermutation unless they form a bijection.
  static Permutation from_images(std::vector<value_type> images);
  static Permutation from_one_line(std::span<const int> one_based);
  /// Parses "2 3 1 4", "2,3,1,4" or, for degree <= 9, the compact "2314".
  static Permutation parse(std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  value_type operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const value_type> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  std::vector<int> one_line() const;
  /// Space-separated 1-based one-line form.
  std::string to_string() const;
  /// Digits run together ("2314") when degree <= 9, otherwise to_string().
  std::string compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<value_type> images) : images_(std::move(images)) {}

  std::vector<value_type> images_;
};

/// (r o s)(i) = r(s(i)).
Permutation compose(const Permutation& r, const Permutation& s);
Permutation inverse(const Permutation& r);

/// Disjoint cycles, 0-based, each starting at its smallest element and
/// ordered by that element. Fixed points appear as 1-cycles.
struct CycleFactorization {
  std::vector<std::vector<Permutation::value_type>> cycles;

  /// "(1 4)(2)(3 5 6)"; with `omit_fixed` the 1-cycles are dropped.
  std::string to_string(bool omit_fixed = false) const;
  Permutation to_permutation(std::size_t degree) const;
};

CycleFactorization cycle_factorization(const Permutation& r);
std::size_t count_cycles(const Permutation& r);

/// Merge-count, O(L log L).
std::uint64_t count_inversions(const Permutation& r);
std::uint64_t count_inversions(std::span<const Permutation::value_type> images);
/// Direct pair count, O(L^2). Kept as a cross-check for the merge count.
std::uint64_t count_inversions_quadratic(std::span<const Permutation::value_type> images);

/// d_C(r, s) = L - C(r^-1 o s).
std::uint64_t cayley_distance(const Permutation& r, const Permutation& s);
/// d_K(r, s) = I(r^-1 o s).
std::uint64_t kendall_distance(const Permutation& r, const Permutation& s);
std::uint64_t distance(const Permutation& r, const Permutation& s, Metric metric);
std::uint64_t norm(const Permutation& r, Metric metric);

/// Largest value the base metric takes on Sym(L).
std::uint64_t max_distance(std::size_t degree, Metric metric) noexcept;

inline constexpr std::size_t kMaxEnumerationDegree = 8;

/// All L! permutations in lexicographic order of their one-line forms, 1 <= L <= 8.
std::vector<Permutation> enumerate_sym(std::size_t degree);

/// Position of `r` in enumerate_sym(r.degree()).
std::size_t lex_rank(const Permutation& r);
Permutation lex_unrank(std::size_t degree, std::size_t rank);

std::uint64_t factorial(std::size_t n);

struct AdjacencyGraph {
  std::size_t degree = 0;
  std::vector<Permutation> nodes;
  /// Unordered edges (u < v) between permutations one adjacent swap apart.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> neighbors;

  /// Breadth-first distances from `source` to every node.
  std::vector<std::size_t> bfs(std::size_t source) const;
  std::string to_dot() const;
  std::string to_edge_list() const;
};

/// Kendall adjacency graph of Sym(L), 2 <= L <= 6.
AdjacencyGraph kendall_adjacency_graph(std::size_t degree);

}  // namespace groupdist
