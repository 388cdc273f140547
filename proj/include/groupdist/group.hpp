#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupdist/perm.hpp"

namespace groupdist {

using Element = std::size_t;

/// A finite group given by a validated multiplication table. Elements are
/// identified by their position in the enumeration a_1..a_n (0-based here);
/// labels are opaque display names. Immutable; copies share storage.
class FiniteGroup {
 public:
  /// Validates closure (rows and columns are bijections), identity, inverses
  /// and associativity (exhaustively, O(n^3)).
  static FiniteGroup from_table(std::vector<std::string> labels,
                                const std::vector<std::vector<Element>>& table,
                                std::string name = "custom");

  std::size_t order() const noexcept { return data_->order; }
  const std::string& name() const noexcept { return data_->name; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  const std::string& label(Element a) const;

  Element op(Element a, Element b) const;
  Element inv(Element a) const;
  Element identity() const noexcept { return data_->identity; }

  /// Row a of the table, i.e. b -> a * b for every b.
  std::vector<Element> row(Element a) const;

  bool is_abelian() const noexcept;
  std::optional<Element> find_label(std::string_view label) const;
  /// Label lookup; "@k" also selects the k-th element (1-based).
  Element parse_element(std::string_view token) const;

  /// Unchecked lookup for inner loops.
  Element op_unchecked(Element a, Element b) const noexcept {
    return data_->table[a * data_->order + b];
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept;

 private:
  struct Data {
    std::size_t order = 0;
    std::string name;
    std::vector<std::string> labels;
    std::vector<Element> table;  // row-major
    Element identity = 0;
    std::vector<Element> inverse;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  void check_index(Element a) const;

  std::shared_ptr<const Data> data_;
};

inline constexpr std::size_t kMaxSymmetricGroupDegree = 6;

/// Sym(L) for 2 <= L <= 6; element i is the i-th permutation in lexicographic
/// order and table[i][j] = index of compose(p_i, p_j).
FiniteGroup build_symmetric(std::size_t degree);
/// Z_n with labels θ0..θ(n-1).
FiniteGroup build_cyclic(std::size_t n);
/// Klein four-group with labels e, a, b, c.
FiniteGroup build_klein();

/// Builtin spec: "sym3", "sym4", ..., "klein", "cyclic:n".
FiniteGroup build_builtin(std::string_view spec);

/// Permutation labelling element `a` of build_symmetric(L).
Permutation symmetric_element(std::size_t degree, Element a);

// .gtab text format: n, then n labels, then n rows of 1-based indices.
FiniteGroup read_gtab(std::istream& in, std::string name = "custom");
FiniteGroup read_gtab_file(const std::string& path);
void write_gtab(std::ostream& out, const FiniteGroup& g);
std::string to_gtab(const FiniteGroup& g);

}  // namespace groupdist
