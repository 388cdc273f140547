#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupdist/embed.hpp"
#include "groupdist/group.hpp"
#include "groupdist/ordinal.hpp"
#include "groupdist/wordmetric.hpp"

namespace groupdist {

/// A sequence of element indices of one group. Series over the implicit
/// Sym(L) of ordinal patterns use lexicographic ranks, which coincide with
/// the element indices of build_symmetric(L).
class GroupSeries {
 public:
  static GroupSeries of_group(const FiniteGroup& g, std::vector<Element> elements);
  static GroupSeries of_patterns(const OrdinalSeries& o);
  static GroupSeries of_patterns(std::size_t degree, const std::vector<Permutation>& patterns);

  const std::string& domain() const noexcept { return domain_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  Element operator[](std::size_t t) const noexcept { return elements_[t]; }

  /// Degree L for series over Sym(L) (implicit or built), otherwise 0.
  std::size_t sym_degree() const noexcept { return sym_degree_; }
  const std::optional<FiniteGroup>& group() const noexcept { return group_; }

  Element op(Element a, Element b) const;
  Element inv(Element a) const;
  std::string label(Element a) const;

  /// Same group, new elements.
  GroupSeries with_elements(std::vector<Element> elements) const;

 private:
  GroupSeries() = default;

  std::string domain_;
  std::size_t order_ = 0;
  std::size_t sym_degree_ = 0;
  std::optional<FiniteGroup> group_;
  std::vector<Element> elements_;
};

/// Pure, total single-pair distance on the element indices of one group.
class DistanceProvider {
 public:
  virtual ~DistanceProvider() = default;

  virtual std::uint64_t operator()(Element a, Element b) const = 0;
  /// "cayley", "kendall", "embedded-kendall(left)", "word", ...
  virtual std::string name() const = 0;
  virtual const std::string& domain() const = 0;
  virtual std::size_t order() const = 0;
  /// Upper bound dist_max. Embedded metrics may never attain it.
  virtual std::uint64_t max_bound() const = 0;
  /// Values the metric can take, when that set is sparse.
  virtual std::optional<std::vector<std::uint64_t>> admissible() const { return std::nullopt; }
};

using DistanceProviderPtr = std::shared_ptr<const DistanceProvider>;

/// d_C or d_K on Sym(L), 2 <= L <= 8.
DistanceProviderPtr make_base_metric(std::size_t degree, Metric metric);
/// D_C or D_K through a Cayley embedding.
DistanceProviderPtr make_embedded_metric(const CayleyEmbedding& emb, Metric metric);
DistanceProviderPtr make_word_metric(const GeneratingSet& gs);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Accepts "1", "2", "inf" or any real >= 1.
double parse_exponent(std::string_view text);
std::string format_exponent(double p);

struct DistanceSeries {
  std::vector<double> values;
  std::size_t window = 1;
  double p = 1.0;
  std::string metric;
  std::uint64_t dist_max = 0;      // per-element bound
  std::uint64_t realized_max = 0;  // largest per-element distance observed

  std::size_t size() const noexcept { return values.size(); }
  /// Integer valued for W = 1 and for p in {1, inf}.
  bool integral() const noexcept { return window == 1 || p == 1.0 || p == kInfinity; }
};

enum class TranscriptSide {
  right,  // b_t * a_t^-1
  left,   // a_t^-1 * b_t
};

DistanceSeries elementwise_distances(const GroupSeries& alpha, const GroupSeries& beta,
                                     const DistanceProvider& metric);
GroupSeries transcript_series(const GroupSeries& alpha, const GroupSeries& beta, TranscriptSide side);
/// l_p distance over sliding windows of W aligned elements; N - W + 1 values.
DistanceSeries windowed_distances(const GroupSeries& alpha, const GroupSeries& beta,
                                  const DistanceProvider& metric, std::size_t window, double p);

enum class Binning {
  exact,
  round_half_up,  // v goes to the integer n with v in (n - 0.5, n + 0.5]
};

struct DistanceHistogram {
  std::vector<double> support;
  std::vector<std::uint64_t> counts;
  std::vector<double> probabilities;
  std::string metric;
  std::size_t window = 1;
  double p = 1.0;

  std::uint64_t total() const noexcept;
  /// Support values with a nonzero count.
  std::vector<double> realized() const;

  std::string to_json() const;
  std::string to_csv() const;
  static DistanceHistogram from_json(const std::string& text);
};

/// Integer bin for round_half_up.
double round_half_up(double v);

/// With `support`, every observed value must belong to it (else
/// UnexpectedDistance) and unobserved support values are kept with count 0.
DistanceHistogram histogram(const DistanceSeries& d, Binning binning,
                            const std::optional<std::vector<double>>& support = std::nullopt);

/// Single-column CSV preceded by a '#' metadata line.
void write_distance_series(std::ostream& out, const DistanceSeries& d);
DistanceSeries read_distance_series(std::istream& in);

}  // namespace groupdist
