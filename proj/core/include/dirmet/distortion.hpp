#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dirmet/matrix.hpp"
#include "dirmet/zigzag.hpp"

namespace dirmet {

using PointPair = std::pair<std::size_t, std::size_t>;

/// Hausdorff distance between nonempty index subsets of one metric.
/// Throws std::invalid_argument on an empty subset.
ExtReal hausdorff(const ExtendedDistanceMatrix& m,
                  std::span<const std::size_t> a,
                  std::span<const std::size_t> b);

/// Hausdorff distance in the zigzag metric of `z`.
ExtReal directed_hausdorff(const DirectedMetricSpace& z,
                           std::span<const std::size_t> a,
                           std::span<const std::size_t> b);

/// sup over pairs of pairs of |dX(x, x') - dY(y, y')|.
/// Throws std::invalid_argument on an empty relation.
ExtReal distortion(std::span<const PointPair> relation,
                   const ExtendedDistanceMatrix& dx,
                   const ExtendedDistanceMatrix& dy);

/// Distortion of the graph of a map f: X -> Y given as an image table.
ExtReal map_distortion(std::span<const std::size_t> f,
                       const ExtendedDistanceMatrix& dx,
                       const ExtendedDistanceMatrix& dy);

/// sup over (x, y) of |dX(x, g(y)) - dY(f(x), y)|.
ExtReal codistortion(std::span<const std::size_t> f,
                     std::span<const std::size_t> g,
                     const ExtendedDistanceMatrix& dx,
                     const ExtendedDistanceMatrix& dy);

/// True iff every edge u -> v of `from` lands in the target preorder, i.e.
/// reach_to(f(u), f(v)). Constant images pass since reach is reflexive.
bool sends_edges_forward(std::span<const std::size_t> f,
                         const FiniteDSpace& from,
                         const ReachabilityPreorder& reach_to);

/// A total function between the points of two directed metric spaces.
///
/// Holds non-owning pointers to both spaces; they must outlive the map.
class VertexMap {
 public:
  /// Throws std::invalid_argument if `image` has the wrong length or an
  /// out-of-range entry.
  VertexMap(const DirectedMetricSpace& from, const DirectedMetricSpace& to,
            std::vector<std::size_t> image);

  const DirectedMetricSpace& from() const { return *from_; }
  const DirectedMetricSpace& to() const { return *to_; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }

  /// Combinatorial d-map criterion.
  bool is_dmap() const;

 private:
  const DirectedMetricSpace* from_;
  const DirectedMetricSpace* to_;
  std::vector<std::size_t> image_;
};

/// Distortion of f in the zigzag metrics.
ExtReal distortion(const VertexMap& f);

/// Codistortion of (f, g) in the zigzag metrics. Throws
/// std::invalid_argument unless f: X -> Y and g: Y -> X.
ExtReal codistortion(const VertexMap& f, const VertexMap& g);

/// A d-map preserving zigzag distances exactly (up to tolerance).
bool is_disometry(const VertexMap& f);

/// A left- and right-total relation between two point sets.
class Correspondence {
 public:
  /// Throws std::invalid_argument if some point of either side is not
  /// covered or an index is out of range.
  Correspondence(std::size_t nx, std::size_t ny, std::vector<PointPair> pairs);

  const std::vector<PointPair>& pairs() const { return pairs_; }

  /// reach_X(x, x') <=> reach_Y(y, y') for all pairs of pairs.
  bool is_dcorrespondence(const ReachabilityPreorder& reach_x,
                          const ReachabilityPreorder& reach_y) const;

 private:
  std::vector<PointPair> pairs_;
};

/// True iff the relation covers every point of both sides.
bool is_correspondence(std::span<const PointPair> relation, std::size_t nx,
                       std::size_t ny);

/// Pairwise d-compatibility of two related pairs (both orders).
inline bool dcompatible(const ReachabilityPreorder& rx,
                        const ReachabilityPreorder& ry, PointPair p,
                        PointPair q) {
  return rx(p.first, q.first) == ry(p.second, q.second) &&
         rx(q.first, p.first) == ry(q.second, p.second);
}

}  // namespace dirmet
