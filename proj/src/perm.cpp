#include "groupdist/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "groupdist/error.hpp"

namespace groupdist {

std::string_view to_string(Metric m) noexcept {
  return m == Metric::cayley ? "cayley" : "kendall";
}

Metric parse_metric(std::string_view name) {
  if (name == "cayley") return Metric::cayley;
  if (name == "kendall") return Metric::kendall;
  fail(ErrorCode::ParseError, "unknown metric '" + std::string(name) + "'");
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<value_type> images(degree);
  std::iota(images.begin(), images.end(), value_type{0});
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(std::size_t degree) {
  std::vector<value_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<value_type>(degree - 1 - i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<value_type> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) {
      fail(ErrorCode::InvalidPermutation,
           "images do not form a bijection of {1.." + std::to_string(images.size()) + "}");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::span<const int> one_based) {
  std::vector<value_type> images;
  images.reserve(one_based.size());
  for (int v : one_based) {
    if (v < 1) fail(ErrorCode::InvalidPermutation, "entry " + std::to_string(v) + " is not positive");
    images.push_back(static_cast<value_type>(v - 1));
  }
  return from_images(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; };
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) fail(ErrorCode::ParseError, "empty permutation");

  std::vector<int> values;
  auto parse_token = [&](std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(ErrorCode::ParseError, "malformed permutation token '" + std::string(tok) + "'");
    }
    values.push_back(v);
  };

  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // Compact form: one digit per entry.
    for (char c : tokens[0]) {
      if (c < '1' || c > '9') {
        fail(ErrorCode::ParseError, "malformed permutation token '" + std::string(tokens[0]) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    for (auto tok : tokens) parse_token(tok);
  }
  return from_one_line(values);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = static_cast<int>(images_[i]) + 1;
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

std::string Permutation::compact() const {
  if (images_.size() > 9) return to_string();
  std::string out;
  for (auto v : images_) out += static_cast<char>('1' + v);
  return out;
}

Permutation compose(const Permutation& r, const Permutation& s) {
  if (r.degree() != s.degree()) {
    fail(ErrorCode::DegreeMismatch,
         "cannot compose degrees " + std::to_string(r.degree()) + " and " + std::to_string(s.degree()));
  }
  std::vector<Permutation::value_type> images(r.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = r[s[i]];
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& r) {
  std::vector<Permutation::value_type> images(r.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[r[i]] = static_cast<Permutation::value_type>(i);
  return Permutation::from_images(std::move(images));
}

std::string CycleFactorization::to_string(bool omit_fixed) const {
  std::string out;
  for (const auto& cycle : cycles) {
    if (omit_fixed && cycle.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation CycleFactorization::to_permutation(std::size_t degree) const {
  std::vector<Permutation::value_type> images(degree);
  std::iota(images.begin(), images.end(), Permutation::value_type{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) fail(ErrorCode::InvalidPermutation, "cycle entry out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

CycleFactorization cycle_factorization(const Permutation& r) {
  CycleFactorization out;
  std::vector<bool> visited(r.degree(), false);
  // Scanning starts in increasing order, so each cycle begins at its minimum.
  for (std::size_t start = 0; start < r.degree(); ++start) {
    if (visited[start]) continue;
    auto& cycle = out.cycles.emplace_back();
    for (auto i = static_cast<Permutation::value_type>(start); !visited[i]; i = r[i]) {
      visited[i] = true;
      cycle.push_back(i);
    }
  }
  return out;
}

namespace {

std::size_t count_cycles_of(std::span<const Permutation::value_type> images,
                            std::vector<std::uint8_t>& visited) {
  visited.assign(images.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (auto i = start; !visited[i]; i = images[i]) visited[i] = 1;
  }
  return cycles;
}

// Sorts `a` in place and returns the number of inversions it had.
std::uint64_t merge_count(std::span<Permutation::value_type> a, std::span<Permutation::value_type> scratch) {
  const std::size_t n = a.size();
  if (n < 2) return 0;
  if (n <= 16) {
    std::uint64_t inv = 0;
    for (std::size_t i = 1; i < n; ++i) {
      auto v = a[i];
      std::size_t j = i;
      while (j > 0 && a[j - 1] > v) {
        a[j] = a[j - 1];
        --j;
        ++inv;
      }
      a[j] = v;
    }
    return inv;
  }
  const std::size_t mid = n / 2;
  std::uint64_t inv = merge_count(a.first(mid), scratch.first(mid)) +
                      merge_count(a.subspan(mid), scratch.subspan(mid));
  std::size_t i = 0, j = mid, k = 0;
  while (i < mid && j < n) {
    if (a[i] <= a[j]) {
      scratch[k++] = a[i++];
    } else {
      inv += mid - i;
      scratch[k++] = a[j++];
    }
  }
  while (i < mid) scratch[k++] = a[i++];
  while (j < n) scratch[k++] = a[j++];
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n), a.begin());
  return inv;
}

// r^-1 o s without validation; both inputs are already bijections.
std::vector<Permutation::value_type> relative(const Permutation& r, const Permutation& s) {
  if (r.degree() != s.degree()) {
    fail(ErrorCode::DegreeMismatch,
         "distance between degrees " + std::to_string(r.degree()) + " and " + std::to_string(s.degree()));
  }
  const std::size_t n = r.degree();
  std::vector<Permutation::value_type> r_inv(n), rel(n);
  for (std::size_t i = 0; i < n; ++i) r_inv[r[i]] = static_cast<Permutation::value_type>(i);
  for (std::size_t i = 0; i < n; ++i) rel[i] = r_inv[s[i]];
  return rel;
}

}  // namespace

std::size_t count_cycles(const Permutation& r) {
  std::vector<std::uint8_t> visited;
  return count_cycles_of(r.images(), visited);
}

std::uint64_t count_inversions(std::span<const Permutation::value_type> images) {
  std::vector<Permutation::value_type> work(images.begin(), images.end());
  std::vector<Permutation::value_type> scratch(work.size());
  return merge_count(work, scratch);
}

std::uint64_t count_inversions(const Permutation& r) { return count_inversions(r.images()); }

std::uint64_t count_inversions_quadratic(std::span<const Permutation::value_type> images) {
  std::uint64_t inv = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] > images[j]) ++inv;
    }
  }
  return inv;
}

std::uint64_t cayley_distance(const Permutation& r, const Permutation& s) {
  auto rel = relative(r, s);
  std::vector<std::uint8_t> visited;
  return rel.size() - count_cycles_of(rel, visited);
}

std::uint64_t kendall_distance(const Permutation& r, const Permutation& s) {
  auto rel = relative(r, s);
  std::vector<Permutation::value_type> scratch(rel.size());
  return merge_count(rel, scratch);
}

std::uint64_t distance(const Permutation& r, const Permutation& s, Metric metric) {
  return metric == Metric::cayley ? cayley_distance(r, s) : kendall_distance(r, s);
}

std::uint64_t norm(const Permutation& r, Metric metric) {
  return metric == Metric::cayley ? r.degree() - count_cycles(r) : count_inversions(r);
}

std::uint64_t max_distance(std::size_t degree, Metric metric) noexcept {
  if (degree == 0) return 0;
  return metric == Metric::cayley ? degree - 1 : degree * (degree - 1) / 2;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Permutation> enumerate_sym(std::size_t degree) {
  if (degree < 1 || degree > kMaxEnumerationDegree) {
    fail(ErrorCode::DegreeTooLarge, "enumeration supports 1 <= L <= " +
                                        std::to_string(kMaxEnumerationDegree) + ", got " +
                                        std::to_string(degree));
  }
  std::vector<Permutation::value_type> images(degree);
  std::iota(images.begin(), images.end(), Permutation::value_type{0});
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t lex_rank(const Permutation& r) {
  const std::size_t n = r.degree();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (r[j] < r[i]) ++smaller_after;
    }
    rank += smaller_after * factorial(n - 1 - i);
  }
  return rank;
}

Permutation lex_unrank(std::size_t degree, std::size_t rank) {
  if (rank >= factorial(degree)) fail(ErrorCode::IndexOutOfRange, "rank out of range");
  std::vector<Permutation::value_type> pool(degree);
  std::iota(pool.begin(), pool.end(), Permutation::value_type{0});
  std::vector<Permutation::value_type> images;
  images.reserve(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    const auto block = factorial(degree - 1 - i);
    const auto idx = rank / block;
    rank %= block;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::from_images(std::move(images));
}

std::vector<std::size_t> AdjacencyGraph::bfs(std::size_t source) const {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(nodes.size(), unseen);
  std::queue<std::size_t> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    auto u = frontier.front();
    frontier.pop();
    for (auto v : neighbors[u]) {
      if (dist[v] == unseen) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

std::string AdjacencyGraph::to_dot() const {
  std::ostringstream os;
  os << "graph kendall_sym" << degree << " {\n";
  for (const auto& node : nodes) os << "  \"" << node.compact() << "\";\n";
  for (auto [u, v] : edges) {
    os << "  \"" << nodes[u].compact() << "\" -- \"" << nodes[v].compact() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::string AdjacencyGraph::to_edge_list() const {
  std::string out;
  for (auto [u, v] : edges) {
    out += nodes[u].compact();
    out += '\t';
    out += nodes[v].compact();
    out += '\n';
  }
  return out;
}

AdjacencyGraph kendall_adjacency_graph(std::size_t degree) {
  if (degree < 2 || degree > 6) {
    fail(ErrorCode::DegreeTooLarge, "adjacency graph supports 2 <= L <= 6, got " + std::to_string(degree));
  }
  AdjacencyGraph g;
  g.degree = degree;
  g.nodes = enumerate_sym(degree);
  g.neighbors.resize(g.nodes.size());
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    std::vector<Permutation::value_type> images(g.nodes[u].images().begin(), g.nodes[u].images().end());
    for (std::size_t i = 0; i + 1 < degree; ++i) {
      std::swap(images[i], images[i + 1]);
      const auto v = lex_rank(Permutation::from_images(images));
      std::swap(images[i], images[i + 1]);
      g.neighbors[u].push_back(v);
      if (u < v) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

}  // namespace groupdist
