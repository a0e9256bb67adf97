#include "dirmet/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dirmet/zigzag.hpp"

namespace dirmet {

double embedded_distance(Point2 a, Point2 b, Embedding e) {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  if (e == Embedding::kFlatTorus) {
    dx = std::min(dx, 1.0 - dx);
    dy = std::min(dy, 1.0 - dy);
  }
  return std::hypot(dx, dy);
}

BaseMetric::BaseMetric(ExtendedDistanceMatrix dense) : rep_(std::move(dense)) {}
BaseMetric::BaseMetric(EmbeddedMetric embedded) : rep_(std::move(embedded)) {}

std::size_t BaseMetric::size() const {
  if (const auto* m = std::get_if<ExtendedDistanceMatrix>(&rep_)) {
    return m->size();
  }
  return std::get<EmbeddedMetric>(rep_).coords.size();
}

ExtReal BaseMetric::operator()(std::size_t i, std::size_t j) const {
  if (const auto* m = std::get_if<ExtendedDistanceMatrix>(&rep_)) {
    return (*m)(i, j);
  }
  const auto& e = std::get<EmbeddedMetric>(rep_);
  if (i == j) return ExtReal::zero();
  return ExtReal(embedded_distance(e.coords[i], e.coords[j], e.embedding));
}

ExtendedDistanceMatrix BaseMetric::materialize() const {
  if (const auto* m = std::get_if<ExtendedDistanceMatrix>(&rep_)) return *m;
  const std::size_t n = size();
  ExtendedDistanceMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.set_symmetric(i, j, (*this)(i, j));
    }
  }
  return out;
}

std::vector<ExtReal> BaseMetric::row(std::size_t i) const {
  if (const auto* m = std::get_if<ExtendedDistanceMatrix>(&rep_)) {
    auto r = m->row(i);
    return {r.begin(), r.end()};
  }
  std::vector<ExtReal> out(size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (*this)(i, j);
  return out;
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument("invalid d-space: " + what);
}

void validate_dense(const ExtendedDistanceMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != ExtReal::zero()) {
      invalid("base(" + std::to_string(i) + "," + std::to_string(i) +
              ") must be 0");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::isnan(m(i, j).value()) || !(m(i, j).value() > 0.0)) {
        invalid("base(" + std::to_string(i) + "," + std::to_string(j) +
                ") must be positive");
      }
      if (!approx_equal(m(i, j), m(j, i))) {
        invalid("base is not symmetric at (" + std::to_string(i) + "," +
                std::to_string(j) + ")");
      }
    }
  }
  if (n <= FiniteDSpace::kTriangleCheckLimit) {
    MetricCheck c = check_extended_metric(m);
    if (!c.ok) {
      invalid(std::string("base violates ") + c.violated + " at (" +
              std::to_string(c.i) + "," + std::to_string(c.j) + "," +
              std::to_string(c.k) + ")");
    }
  }
}

}  // namespace

FiniteDSpace::FiniteDSpace(std::vector<std::string> labels, BaseMetric base,
                           std::vector<Edge> edges)
    : labels_(std::move(labels)),
      base_(std::move(base)),
      edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  if (base_.size() != n) {
    invalid("base has " + std::to_string(base_.size()) + " points, labels " +
            std::to_string(n));
  }
  if (base_.is_dense()) {
    validate_dense(base_.materialize());
  } else {
    // Distinct coordinates (mod 1 on the torus) give positive distances.
    const EmbeddedMetric& em = *base_.embedded();
    std::vector<std::pair<Point2, std::size_t>> sorted(n);
    for (std::size_t i = 0; i < n; ++i) {
      Point2 p = em.coords[i];
      if (em.embedding == Embedding::kFlatTorus) {
        p = {p.x - std::floor(p.x), p.y - std::floor(p.y)};
      }
      sorted[i] = {p, i};
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.first.x != b.first.x ? a.first.x < b.first.x
                                    : a.first.y < b.first.y;
    });
    for (std::size_t i = 1; i < n; ++i) {
      if (sorted[i].first == sorted[i - 1].first) {
        invalid("points " + std::to_string(sorted[i - 1].second) + " and " +
                std::to_string(sorted[i].second) + " coincide");
      }
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    const std::string where = "edge " + std::to_string(e);
    if (edge.src >= n || edge.dst >= n) invalid(where + " is out of range");
    if (edge.src == edge.dst) invalid(where + " is a self loop");
    if (!std::isfinite(edge.length) || !(edge.length > 0.0)) {
      invalid(where + " must have positive finite length");
    }
    if (!approx_le(base_(edge.src, edge.dst), ExtReal(edge.length))) {
      invalid(where + " is shorter than the base distance of its endpoints");
    }
  }
}

FiniteDSpace FiniteDSpace::from_edges(std::vector<std::string> labels,
                                      std::vector<Edge> edges) {
  const std::size_t n = labels.size();
  ExtendedDistanceMatrix placeholder(n, ExtReal(1.0));
  // The placeholder only carries the point count into zigzag_row, which
  // reads edges alone.
  FiniteDSpace tmp;
  tmp.labels_ = labels;
  tmp.base_ = BaseMetric(placeholder);
  tmp.edges_ = edges;
  ExtendedDistanceMatrix base = compute_zigzag(tmp);
  return FiniteDSpace(std::move(labels), BaseMetric(std::move(base)),
                      std::move(edges));
}

std::optional<std::size_t> FiniteDSpace::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool operator==(const FiniteDSpace& a, const FiniteDSpace& b) {
  return a.labels_ == b.labels_ && a.edges_ == b.edges_ &&
         a.base_.materialize() == b.base_.materialize();
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace dirmet
