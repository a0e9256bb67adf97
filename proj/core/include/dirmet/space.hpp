#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dirmet/ext_real.hpp"
#include "dirmet/matrix.hpp"

namespace dirmet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// A directed generator: a d-path of the given length from `src` to `dst`.
struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  double length = 0.0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// How an embedded base metric measures distances between coordinates.
enum class Embedding {
  kEuclidean,  // L2 in the plane
  kFlatTorus,  // L2 on R^2 / Z^2 (unit square with opposite sides glued)
};

/// Coordinates plus a rule; distances are computed on demand.
struct EmbeddedMetric {
  std::vector<Point2> coords;
  Embedding embedding = Embedding::kEuclidean;
};

/// The symmetric base metric d of a finite d-space.
///
/// Either an explicit matrix or an embedded point cloud. The embedded form
/// exists so that large grids do not need an n^2 matrix.
class BaseMetric {
 public:
  BaseMetric() = default;
  explicit BaseMetric(ExtendedDistanceMatrix dense);
  explicit BaseMetric(EmbeddedMetric embedded);

  std::size_t size() const;
  ExtReal operator()(std::size_t i, std::size_t j) const;

  bool is_dense() const {
    return std::holds_alternative<ExtendedDistanceMatrix>(rep_);
  }
  /// Coordinates when embedded.
  const EmbeddedMetric* embedded() const {
    return std::get_if<EmbeddedMetric>(&rep_);
  }

  ExtendedDistanceMatrix materialize() const;
  std::vector<ExtReal> row(std::size_t i) const;

 private:
  std::variant<ExtendedDistanceMatrix, EmbeddedMetric> rep_;
};

/// Distance between two points under an embedding rule.
double embedded_distance(Point2 a, Point2 b, Embedding e);

/// A finite directed metric space: points, a base metric and directed
/// weighted generators. Immutable once built; construction validates.
///
/// Invariants (checked, std::invalid_argument on violation):
///   - base has zero diagonal, is symmetric and positive off the diagonal;
///   - dense bases with at most `kTriangleCheckLimit` points satisfy the
///     triangle inequality under extended arithmetic;
///   - edges have distinct endpoints in range and length >= base(src, dst).
class FiniteDSpace {
 public:
  static constexpr std::size_t kTriangleCheckLimit = 512;

  FiniteDSpace() = default;
  FiniteDSpace(std::vector<std::string> labels, BaseMetric base,
               std::vector<Edge> edges);

  /// Base metric defaults to the shortest-path metric of the edge lengths
  /// with every edge usable in both directions.
  static FiniteDSpace from_edges(std::vector<std::string> labels,
                                 std::vector<Edge> edges);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const BaseMetric& base() const { return base_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Index of the point with this label, if any.
  std::optional<std::size_t> find(const std::string& label) const;

  friend bool operator==(const FiniteDSpace& a, const FiniteDSpace& b);

 private:
  std::vector<std::string> labels_;
  BaseMetric base_;
  std::vector<Edge> edges_;
};

/// Default point labels "0", "1", ...
std::vector<std::string> index_labels(std::size_t n);

}  // namespace dirmet
