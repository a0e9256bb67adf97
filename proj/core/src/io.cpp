#include "dirmet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace dirmet::io {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw FormatError(field + ": " + what);
}

ExtReal parse_entry(const json& v, const std::string& field) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return ExtReal::infinity();
    bad(field, "expected a number or \"inf\"");
  }
  if (!v.is_number()) bad(field, "expected a number or \"inf\"");
  const double d = v.get<double>();
  if (!(d >= 0.0)) bad(field, "distance must be nonnegative");
  return ExtReal(d);
}

std::size_t parse_index(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    bad(field, "expected a nonnegative integer");
  }
  const auto i = v.get<unsigned long long>();
  if (i >= n) bad(field, "index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i);
}

std::string line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return "line " + std::to_string(line);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

FiniteDSpace parse_space(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(line_of(text, e.byte == 0 ? 0 : e.byte - 1) +
                      ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) bad("document", "expected a JSON object");

  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array()) bad("labels", "expected an array of strings");
    labels.emplace();
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) bad("labels[" + std::to_string(i) + "]", "expected a string");
      labels->push_back(l[i].get<std::string>());
    }
  }

  std::optional<ExtendedDistanceMatrix> base;
  if (doc.contains("base")) {
    const json& b = doc["base"];
    if (!b.is_array()) bad("base", "expected an array of rows");
    const std::size_t n = b.size();
    if (labels && labels->size() != n) {
      bad("base", "has " + std::to_string(n) + " rows for " +
                      std::to_string(labels->size()) + " labels");
    }
    base.emplace(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row = "base[" + std::to_string(i) + "]";
      if (!b[i].is_array() || b[i].size() != n) {
        bad(row, "expected a row of " + std::to_string(n) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) {
        (*base)(i, j) = parse_entry(b[i][j], row + "[" + std::to_string(j) + "]");
      }
    }
  }
  if (!labels && !base) bad("labels", "required when \"base\" is absent");
  const std::size_t n = labels ? labels->size() : base->size();
  if (!labels) labels = index_labels(n);

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const json& es = doc["edges"];
    if (!es.is_array()) bad("edges", "expected an array of [src, dst, length]");
    for (std::size_t e = 0; e < es.size(); ++e) {
      const std::string field = "edges[" + std::to_string(e) + "]";
      if (!es[e].is_array() || es[e].size() != 3) {
        bad(field, "expected [src, dst, length]");
      }
      Edge edge;
      edge.src = parse_index(es[e][0], n, field + "[0]");
      edge.dst = parse_index(es[e][1], n, field + "[1]");
      if (!es[e][2].is_number()) bad(field + "[2]", "expected a number");
      edge.length = es[e][2].get<double>();
      if (!(edge.length > 0.0) || !std::isfinite(edge.length)) {
        bad(field + "[2]", "length must be positive and finite");
      }
      edges.push_back(edge);
    }
  }

  try {
    if (base) {
      return FiniteDSpace(std::move(*labels), BaseMetric(std::move(*base)),
                          std::move(edges));
    }
    return FiniteDSpace::from_edges(std::move(*labels), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string space_to_json(const FiniteDSpace& space) {
  json doc;
  doc["labels"] = space.labels();
  json base = json::array();
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const ExtReal v = space.base()(i, j);
      if (v.is_infinite()) {
        row.push_back("inf");
      } else {
        row.push_back(v.value());
      }
    }
    base.push_back(std::move(row));
  }
  doc["base"] = std::move(base);
  json edges = json::array();
  for (const Edge& e : space.edges()) edges.push_back({e.src, e.dst, e.length});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

FiniteDSpace load_space(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_space(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

std::string matrix_csv(const ExtendedDistanceMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ',';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string reachability_csv(const ReachabilityPreorder& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > 0) out += ',';
      out += r(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace dirmet::io
