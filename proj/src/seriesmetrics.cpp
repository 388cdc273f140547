#include "groupdist/seriesmetrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "groupdist/error.hpp"

namespace groupdist {

GroupSeries GroupSeries::of_group(const FiniteGroup& g, std::vector<Element> elements) {
  for (auto a : elements) {
    if (a >= g.order()) {
      fail(ErrorCode::IndexOutOfRange, "series element " + std::to_string(a) + " outside group of order " +
                                           std::to_string(g.order()));
    }
  }
  GroupSeries s;
  s.domain_ = g.name();
  s.order_ = g.order();
  s.group_ = g;
  if (g.name().starts_with("Sym(")) {
    // build_symmetric names its groups Sym(L); recover L from the order.
    for (std::size_t L = 2; L <= kMaxSymmetricGroupDegree; ++L) {
      if (factorial(L) == g.order() && g.name() == "Sym(" + std::to_string(L) + ")") s.sym_degree_ = L;
    }
  }
  s.elements_ = std::move(elements);
  return s;
}

GroupSeries GroupSeries::of_patterns(std::size_t degree, const std::vector<Permutation>& patterns) {
  if (degree < 1 || degree > kMaxEnumerationDegree) {
    fail(ErrorCode::DegreeTooLarge, "ordinal series over Sym(L) support 1 <= L <= " +
                                        std::to_string(kMaxEnumerationDegree));
  }
  GroupSeries s;
  s.domain_ = "Sym(" + std::to_string(degree) + ")";
  s.order_ = factorial(degree);
  s.sym_degree_ = degree;
  s.elements_.reserve(patterns.size());
  for (const auto& p : patterns) {
    if (p.degree() != degree) fail(ErrorCode::DegreeMismatch, "pattern degree differs from series degree");
    s.elements_.push_back(lex_rank(p));
  }
  return s;
}

GroupSeries GroupSeries::of_patterns(const OrdinalSeries& o) { return of_patterns(o.degree, o.patterns); }

Element GroupSeries::op(Element a, Element b) const {
  if (group_) return group_->op(a, b);
  return lex_rank(compose(lex_unrank(sym_degree_, a), lex_unrank(sym_degree_, b)));
}

Element GroupSeries::inv(Element a) const {
  if (group_) return group_->inv(a);
  return lex_rank(inverse(lex_unrank(sym_degree_, a)));
}

std::string GroupSeries::label(Element a) const {
  if (group_) return group_->label(a);
  return lex_unrank(sym_degree_, a).compact();
}

GroupSeries GroupSeries::with_elements(std::vector<Element> elements) const {
  GroupSeries s = *this;
  s.elements_ = std::move(elements);
  return s;
}

namespace {

class BaseMetric final : public DistanceProvider {
 public:
  BaseMetric(std::size_t degree, Metric metric)
      : degree_(degree), metric_(metric), perms_(enumerate_sym(degree)),
        domain_("Sym(" + std::to_string(degree) + ")") {}

  std::uint64_t operator()(Element a, Element b) const override {
    return distance(perms_.at(a), perms_.at(b), metric_);
  }
  std::string name() const override { return std::string(to_string(metric_)); }
  const std::string& domain() const override { return domain_; }
  std::size_t order() const override { return perms_.size(); }
  std::uint64_t max_bound() const override { return max_distance(degree_, metric_); }

 private:
  std::size_t degree_;
  Metric metric_;
  std::vector<Permutation> perms_;
  std::string domain_;
};

class EmbeddedMetric final : public DistanceProvider {
 public:
  EmbeddedMetric(CayleyEmbedding emb, Metric metric)
      : emb_(std::move(emb)), metric_(metric), admissible_(admissible_distances(emb_, metric_)) {}

  std::uint64_t operator()(Element a, Element b) const override { return group_distance(emb_, metric_, a, b); }
  std::string name() const override {
    return "embedded-" + std::string(to_string(metric_)) + "(" + std::string(to_string(emb_.variant())) + ")";
  }
  const std::string& domain() const override { return emb_.group().name(); }
  std::size_t order() const override { return emb_.group().order(); }
  std::uint64_t max_bound() const override { return embedded_distance_bound(order(), metric_); }
  std::optional<std::vector<std::uint64_t>> admissible() const override { return admissible_; }

 private:
  CayleyEmbedding emb_;
  Metric metric_;
  std::vector<std::uint64_t> admissible_;
};

class WordMetric final : public DistanceProvider {
 public:
  explicit WordMetric(GeneratingSet gs) : gs_(std::move(gs)) {}

  std::uint64_t operator()(Element a, Element b) const override { return word_distance(gs_, a, b); }
  std::string name() const override { return "word"; }
  const std::string& domain() const override { return gs_.group().name(); }
  std::size_t order() const override { return gs_.group().order(); }
  std::uint64_t max_bound() const override {
    return *std::max_element(gs_.lengths().begin(), gs_.lengths().end());
  }
  std::optional<std::vector<std::uint64_t>> admissible() const override { return distinct_values(gs_.lengths()); }

 private:
  GeneratingSet gs_;
};

void check_aligned(const GroupSeries& alpha, const GroupSeries& beta) {
  if (alpha.size() != beta.size()) {
    fail(ErrorCode::LengthMismatch, "series lengths " + std::to_string(alpha.size()) + " and " +
                                        std::to_string(beta.size()) + " differ");
  }
  if (alpha.domain() != beta.domain() || alpha.order() != beta.order()) {
    fail(ErrorCode::GroupMismatch, "series live in different groups: " + alpha.domain() + " and " + beta.domain());
  }
}

void check_metric(const GroupSeries& s, const DistanceProvider& metric) {
  if (s.domain() != metric.domain() || s.order() != metric.order()) {
    fail(ErrorCode::GroupMismatch, "metric on " + metric.domain() + " applied to a series over " + s.domain());
  }
}

}  // namespace

DistanceProviderPtr make_base_metric(std::size_t degree, Metric metric) {
  if (degree < 2 || degree > kMaxEnumerationDegree) {
    fail(ErrorCode::DegreeTooLarge, "base metric supports 2 <= L <= " + std::to_string(kMaxEnumerationDegree));
  }
  return std::make_shared<BaseMetric>(degree, metric);
}

DistanceProviderPtr make_embedded_metric(const CayleyEmbedding& emb, Metric metric) {
  if (!emb.injective()) fail(ErrorCode::InvalidEmbedding, "embedding is not injective");
  return std::make_shared<EmbeddedMetric>(emb, metric);
}

DistanceProviderPtr make_word_metric(const GeneratingSet& gs) { return std::make_shared<WordMetric>(gs); }

double parse_exponent(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "max") return kInfinity;
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::ParseError, "malformed exponent '" + std::string(text) + "'");
  }
  if (!(p >= 1.0)) fail(ErrorCode::InvalidParameter, "exponent p must be >= 1, got " + std::string(text));
  return p;
}

std::string format_exponent(double p) {
  if (p == kInfinity) return "inf";
  std::ostringstream os;
  os << std::setprecision(17) << p;
  return os.str();
}

DistanceSeries elementwise_distances(const GroupSeries& alpha, const GroupSeries& beta,
                                     const DistanceProvider& metric) {
  return windowed_distances(alpha, beta, metric, 1, 1.0);
}

GroupSeries transcript_series(const GroupSeries& alpha, const GroupSeries& beta, TranscriptSide side) {
  check_aligned(alpha, beta);
  std::vector<Element> out;
  out.reserve(alpha.size());
  for (std::size_t t = 0; t < alpha.size(); ++t) {
    const auto a_inv = alpha.inv(alpha[t]);
    out.push_back(side == TranscriptSide::right ? alpha.op(beta[t], a_inv) : alpha.op(a_inv, beta[t]));
  }
  return alpha.with_elements(std::move(out));
}

DistanceSeries windowed_distances(const GroupSeries& alpha, const GroupSeries& beta,
                                  const DistanceProvider& metric, std::size_t window, double p) {
  check_aligned(alpha, beta);
  check_metric(alpha, metric);
  if (window < 1) fail(ErrorCode::InvalidParameter, "window size must be at least 1");
  if (!(p >= 1.0)) fail(ErrorCode::InvalidParameter, "exponent p must be >= 1");
  if (window > alpha.size()) {
    fail(ErrorCode::WindowTooLarge, "window " + std::to_string(window) + " exceeds series length " +
                                        std::to_string(alpha.size()));
  }

  const auto n = alpha.size();
  std::vector<std::uint64_t> d(n);
  for (std::size_t t = 0; t < n; ++t) d[t] = metric(alpha[t], beta[t]);

  DistanceSeries out;
  out.window = window;
  out.p = p;
  out.metric = metric.name();
  out.dist_max = metric.max_bound();
  out.realized_max = n ? *std::max_element(d.begin(), d.end()) : 0;
  out.values.reserve(n - window + 1);
  for (std::size_t t = 0; t + window <= n; ++t) {
    const auto first = d.begin() + static_cast<std::ptrdiff_t>(t);
    const auto last = first + static_cast<std::ptrdiff_t>(window);
    double v = 0.0;
    if (p == kInfinity) {
      v = static_cast<double>(*std::max_element(first, last));
    } else if (p == 1.0) {
      std::uint64_t sum = 0;
      for (auto it = first; it != last; ++it) sum += *it;
      v = static_cast<double>(sum);
    } else if (p == 2.0) {
      std::uint64_t sum = 0;
      for (auto it = first; it != last; ++it) sum += *it * *it;
      v = std::sqrt(static_cast<double>(sum));
    } else {
      double sum = 0.0;
      for (auto it = first; it != last; ++it) sum += std::pow(static_cast<double>(*it), p);
      v = std::pow(sum, 1.0 / p);
    }
    out.values.push_back(v);
  }
  return out;
}

double round_half_up(double v) { return std::ceil(v - 0.5); }

std::uint64_t DistanceHistogram::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::vector<double> DistanceHistogram::realized() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (counts[i] > 0) out.push_back(support[i]);
  }
  return out;
}

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  if (std::floor(v) == v && std::abs(v) < 1e15) {
    os << static_cast<long long>(v);
  } else {
    os << std::setprecision(17) << v;
  }
  return os.str();
}

nlohmann::json number_or_inf(double p) {
  if (p == kInfinity) return "inf";
  return p;
}

}  // namespace

std::string DistanceHistogram::to_json() const {
  nlohmann::json j;
  j["support"] = support;
  j["counts"] = counts;
  j["probabilities"] = probabilities;
  j["metric"] = metric;
  j["W"] = window;
  j["p"] = number_or_inf(p);
  return j.dump(2) + "\n";
}

std::string DistanceHistogram::to_csv() const {
  std::ostringstream os;
  os << "distance,probability\n";
  for (std::size_t i = 0; i < support.size(); ++i) {
    os << format_value(support[i]) << ',' << std::setprecision(17) << probabilities[i] << '\n';
  }
  return os.str();
}

DistanceHistogram DistanceHistogram::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    DistanceHistogram h;
    h.support = j.at("support").get<std::vector<double>>();
    h.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    h.probabilities = j.at("probabilities").get<std::vector<double>>();
    h.metric = j.at("metric").get<std::string>();
    h.window = j.at("W").get<std::size_t>();
    const auto& p = j.at("p");
    h.p = p.is_string() ? parse_exponent(p.get<std::string>()) : p.get<double>();
    if (h.counts.size() != h.support.size() || h.probabilities.size() != h.support.size()) {
      fail(ErrorCode::ParseError, "histogram JSON has inconsistent lengths");
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("histogram JSON: ") + e.what());
  }
}

DistanceHistogram histogram(const DistanceSeries& d, Binning binning, const std::optional<std::vector<double>>& support) {
  if (d.values.empty()) fail(ErrorCode::InvalidParameter, "cannot build a histogram of an empty series");
  std::map<double, std::uint64_t> bins;
  if (support) {
    for (double s : *support) bins.emplace(s, 0);
  }
  for (double v : d.values) {
    const double key = binning == Binning::round_half_up ? round_half_up(v) : v;
    if (support && !bins.contains(key)) {
      fail(ErrorCode::UnexpectedDistance, "observed distance " + format_value(key) + " (" + d.metric +
                                              ") is not in the admissible set");
    }
    ++bins[key];
  }
  DistanceHistogram h;
  h.metric = d.metric;
  h.window = d.window;
  h.p = d.p;
  const auto total = static_cast<double>(d.values.size());
  for (auto [value, count] : bins) {
    h.support.push_back(value);
    h.counts.push_back(count);
    h.probabilities.push_back(static_cast<double>(count) / total);
  }
  return h;
}

void write_distance_series(std::ostream& out, const DistanceSeries& d) {
  out << "# metric=" << d.metric << " W=" << d.window << " p=" << format_exponent(d.p)
      << " dist_max=" << d.dist_max << " realized_max=" << d.realized_max << '\n';
  for (double v : d.values) out << format_value(v) << '\n';
}

DistanceSeries read_distance_series(std::istream& in) {
  DistanceSeries d;
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) {
      std::istringstream ls(line.substr(1));
      for (std::string kv; ls >> kv;) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const auto key = kv.substr(0, eq);
        const auto value = kv.substr(eq + 1);
        if (key == "metric") d.metric = value;
        else if (key == "W") d.window = std::stoull(value);
        else if (key == "p") d.p = parse_exponent(value);
        else if (key == "dist_max") d.dist_max = std::stoull(value);
        else if (key == "realized_max") d.realized_max = std::stoull(value);
      }
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    double v = 0.0;
    const auto end = line.find_last_not_of(" \t\r") + 1;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + end, v);
    if (ec != std::errc() || ptr != line.data() + end) fail(ErrorCode::ParseError, "bad distance value '" + line + "'");
    d.values.push_back(v);
  }
  return d;
}

}  // namespace groupdist
