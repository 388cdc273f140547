#include "groupdist/distance_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "groupdist/error.hpp"

namespace groupdist {

std::vector<std::vector<std::uint64_t>> DistanceMatrix::rows() const {
  std::vector<std::vector<std::uint64_t>> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    out[i].assign(values.begin() + static_cast<std::ptrdiff_t>(i * order),
                  values.begin() + static_cast<std::ptrdiff_t>((i + 1) * order));
  }
  return out;
}

std::string DistanceMatrix::to_csv() const {
  std::ostringstream os;
  os << metric;
  for (const auto& l : labels) os << ',' << l;
  os << '\n';
  for (std::size_t i = 0; i < order; ++i) {
    os << labels[i];
    for (std::size_t j = 0; j < order; ++j) os << ',' << at(i, j);
    os << '\n';
  }
  return os.str();
}

std::string DistanceMatrix::to_json() const {
  nlohmann::json j;
  j["order"] = order;
  j["metric"] = metric;
  j["variant"] = variant;
  j["labels"] = labels;
  j["values"] = rows();
  j["admissible"] = admissible;
  if (!generators.empty()) j["generators"] = generators;
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ls(line);
  while (std::getline(ls, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

DistanceMatrix DistanceMatrix::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "empty distance matrix CSV");
  auto header = split(line, ',');
  if (header.size() < 2) fail(ErrorCode::ParseError, "distance matrix CSV header has no labels");
  DistanceMatrix m;
  m.metric = header[0];
  m.labels.assign(header.begin() + 1, header.end());
  m.order = m.labels.size();
  for (std::size_t i = 0; i < m.order; ++i) {
    if (!std::getline(in, line)) fail(ErrorCode::ParseError, "distance matrix CSV is missing rows");
    auto cells = split(line, ',');
    if (cells.size() != m.order + 1 || cells[0] != m.labels[i]) {
      fail(ErrorCode::ParseError, "distance matrix CSV row " + std::to_string(i + 1) + " is malformed");
    }
    for (std::size_t j = 1; j < cells.size(); ++j) {
      std::uint64_t v = 0;
      const auto& c = cells[j];
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || ptr != c.data() + c.size()) {
        fail(ErrorCode::ParseError, "bad distance '" + c + "'");
      }
      m.values.push_back(v);
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty()) fail(ErrorCode::ParseError, "trailing content in distance matrix CSV");
  }
  return m;
}

DistanceMatrix DistanceMatrix::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    DistanceMatrix m;
    m.order = j.at("order").get<std::size_t>();
    m.metric = j.at("metric").get<std::string>();
    m.variant = j.at("variant").get<std::string>();
    m.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& row : j.at("values")) {
      for (const auto& v : row) m.values.push_back(v.get<std::uint64_t>());
    }
    m.admissible = j.at("admissible").get<std::vector<std::uint64_t>>();
    if (j.contains("generators")) m.generators = j["generators"].get<std::vector<std::string>>();
    if (m.labels.size() != m.order || m.values.size() != m.order * m.order) {
      fail(ErrorCode::ParseError, "distance matrix JSON has inconsistent dimensions");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("distance matrix JSON: ") + e.what());
  }
}

std::vector<std::uint64_t> distinct_values(const std::vector<std::uint64_t>& row) {
  std::vector<std::uint64_t> out = row;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace groupdist
