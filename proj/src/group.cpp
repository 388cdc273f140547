#include "groupdist/group.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "groupdist/error.hpp"

namespace groupdist {

namespace {

std::string witness(const std::vector<std::string>& labels, std::initializer_list<Element> elems) {
  std::string out = "(";
  bool first = true;
  for (auto e : elems) {
    if (!first) out += ", ";
    out += labels[e];
    first = false;
  }
  return out + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    const std::vector<std::vector<Element>>& table,
                                    std::string name) {
  const std::size_t n = labels.size();
  if (n == 0) fail(ErrorCode::NotClosed, "group must be nonempty");
  if (table.size() != n) {
    fail(ErrorCode::NotClosed, "table has " + std::to_string(table.size()) + " rows, expected " +
                                   std::to_string(n));
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty() || l.find_first_of(" \t\r\n") != std::string::npos || l.front() == '#') {
        fail(ErrorCode::ParseError, "invalid element label '" + l + "'");
      }
      if (!seen.insert(l).second) fail(ErrorCode::ParseError, "duplicate element label '" + l + "'");
    }
  }

  auto data = std::make_shared<Data>();
  data->order = n;
  data->name = std::move(name);
  data->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      fail(ErrorCode::NotClosed, "row " + labels[i] + " has " + std::to_string(table[i].size()) +
                                     " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        fail(ErrorCode::NotClosed, "entry " + witness(labels, {i, j}) + " is outside the group");
      }
      data->table[i * n + j] = table[i][j];
    }
  }
  const auto& t = data->table;

  // Every row and column must be a bijection.
  std::vector<std::uint8_t> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[t[i * n + j]]++) fail(ErrorCode::NotClosed, "row " + labels[i] + " repeats an element");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[t[j * n + i]]++) fail(ErrorCode::NotClosed, "column " + labels[i] + " repeats an element");
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = t[e * n + j] == j && t[j * n + e] == j;
    if (ok) identity = e;
  }
  if (!identity) fail(ErrorCode::NoIdentity, "no two-sided identity element");
  data->identity = *identity;

  data->inverse.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i * n + j] == *identity && t[j * n + i] == *identity) {
        data->inverse[i] = j;
        break;
      }
    }
    if (data->inverse[i] == n) fail(ErrorCode::NoInverse, "element " + labels[i] + " has no two-sided inverse");
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = t[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          fail(ErrorCode::NotAssociative, "witness triple " + witness(labels, {i, j, k}));
        }
      }
    }
  }

  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

void FiniteGroup::check_index(Element a) const {
  if (a >= data_->order) {
    fail(ErrorCode::IndexOutOfRange,
         "element index " + std::to_string(a) + " outside group of order " + std::to_string(data_->order));
  }
}

const std::string& FiniteGroup::label(Element a) const {
  check_index(a);
  return data_->labels[a];
}

Element FiniteGroup::op(Element a, Element b) const {
  check_index(a);
  check_index(b);
  return op_unchecked(a, b);
}

Element FiniteGroup::inv(Element a) const {
  check_index(a);
  return data_->inverse[a];
}

std::vector<Element> FiniteGroup::row(Element a) const {
  check_index(a);
  const auto n = data_->order;
  return {data_->table.begin() + static_cast<std::ptrdiff_t>(a * n),
          data_->table.begin() + static_cast<std::ptrdiff_t>((a + 1) * n)};
}

bool FiniteGroup::is_abelian() const noexcept {
  const auto n = data_->order;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (data_->table[i * n + j] != data_->table[j * n + i]) return false;
    }
  }
  return true;
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < data_->order; ++i) {
    if (data_->labels[i] == label) return i;
  }
  return std::nullopt;
}

Element FiniteGroup::parse_element(std::string_view token) const {
  if (auto e = find_label(token)) return *e;
  if (token.size() > 1 && token.front() == '@') {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), k);
    if (ec == std::errc() && ptr == token.data() + token.size() && k >= 1 && k <= data_->order) return k - 1;
  }
  fail(ErrorCode::ParseError, "unknown element '" + std::string(token) + "' in group " + data_->name);
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels && a.data_->table == b.data_->table;
}

FiniteGroup build_symmetric(std::size_t degree) {
  if (degree < 2 || degree > kMaxSymmetricGroupDegree) {
    fail(ErrorCode::DegreeTooLarge, "Sym(L) builder supports 2 <= L <= " +
                                        std::to_string(kMaxSymmetricGroupDegree) + ", got " +
                                        std::to_string(degree));
  }
  const auto perms = enumerate_sym(degree);
  std::vector<std::string> labels;
  labels.reserve(perms.size());
  for (const auto& p : perms) labels.push_back(p.compact());
  std::vector<std::vector<Element>> table(perms.size(), std::vector<Element>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) table[i][j] = lex_rank(compose(perms[i], perms[j]));
  }
  return FiniteGroup::from_table(std::move(labels), table, "Sym(" + std::to_string(degree) + ")");
}

FiniteGroup build_cyclic(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidParameter, "cyclic group order must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("θ" + std::to_string(i));
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(labels), table, "Z" + std::to_string(n));
}

FiniteGroup build_klein() {
  return FiniteGroup::from_table({"e", "a", "b", "c"},
                                 {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, "Klein");
}

FiniteGroup build_builtin(std::string_view spec) {
  if (spec == "klein") return build_klein();
  if (spec.starts_with("sym")) {
    std::size_t L = 0;
    auto rest = spec.substr(3);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), L);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) return build_symmetric(L);
  }
  if (spec.starts_with("cyclic:")) {
    std::size_t n = 0;
    auto rest = spec.substr(7);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) return build_cyclic(n);
  }
  fail(ErrorCode::ParseError, "unknown builtin group '" + std::string(spec) +
                                  "' (expected symL, klein or cyclic:n)");
}

Permutation symmetric_element(std::size_t degree, Element a) { return lex_unrank(degree, a); }

namespace {

// Whitespace tokenizer that drops '#' comments and tracks line numbers.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> toks;
      for (std::string tok; ls >> tok;) toks.push_back(tok);
      if (!toks.empty()) lines_.push_back({lineno, std::move(toks)});
    }
  }

  const std::vector<std::string>& next_line(const char* what) {
    if (pos_ >= lines_.size()) fail(ErrorCode::ParseError, std::string("unexpected end of file, expected ") + what);
    current_line_ = lines_[pos_].first;
    return lines_[pos_++].second;
  }

  bool at_end() const { return pos_ >= lines_.size(); }
  std::size_t line() const { return current_line_; }
  std::size_t upcoming_line() const { return lines_[pos_].first; }

 private:
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines_;
  std::size_t pos_ = 0;
  std::size_t current_line_ = 0;
};

std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected a natural number, got '" + tok + "'");
  }
  return v;
}

}  // namespace

FiniteGroup read_gtab(std::istream& in, std::string name) {
  TokenReader reader(in);
  const auto& header = reader.next_line("group order");
  if (header.size() != 1) fail(ErrorCode::ParseError, "line " + std::to_string(reader.line()) + ": expected the order alone");
  const auto n = parse_count(header[0], reader.line());
  if (n == 0) fail(ErrorCode::ParseError, "group order must be positive");

  const auto& label_line = reader.next_line("labels");
  if (label_line.size() != n) {
    fail(ErrorCode::ParseError, "line " + std::to_string(reader.line()) + ": expected " + std::to_string(n) +
                                    " labels, got " + std::to_string(label_line.size()));
  }
  std::vector<std::string> labels = label_line;

  std::vector<std::vector<Element>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = reader.next_line("table row");
    if (row.size() != n) {
      fail(ErrorCode::ParseError, "line " + std::to_string(reader.line()) + ": expected " + std::to_string(n) +
                                      " entries, got " + std::to_string(row.size()));
    }
    for (const auto& tok : row) {
      const auto v = parse_count(tok, reader.line());
      if (v < 1 || v > n) {
        fail(ErrorCode::ParseError, "line " + std::to_string(reader.line()) + ": index " + tok + " outside 1.." +
                                        std::to_string(n));
      }
      table[i].push_back(v - 1);
    }
  }
  if (!reader.at_end()) {
    fail(ErrorCode::ParseError, "line " + std::to_string(reader.upcoming_line()) + ": trailing content after table");
  }
  return FiniteGroup::from_table(std::move(labels), table, std::move(name));
}

FiniteGroup read_gtab_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  auto stem = path.substr(path.find_last_of('/') + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem.erase(dot);
  return read_gtab(in, stem);
}

void write_gtab(std::ostream& out, const FiniteGroup& g) {
  const auto n = g.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << g.labels()[i];
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << g.op_unchecked(i, j) + 1;
    out << '\n';
  }
}

std::string to_gtab(const FiniteGroup& g) {
  std::ostringstream os;
  write_gtab(os, g);
  return os.str();
}

}  // namespace groupdist
