#pragma once

#include <cstddef>
#include <vector>

#include "dirmet/matrix.hpp"
#include "dirmet/space.hpp"

namespace dirmet {

/// Symmetrized edge graph prepared for repeated single-source queries.
class ZigzagEngine {
 public:
  explicit ZigzagEngine(const FiniteDSpace& space);

  std::size_t size() const { return offsets_.size() - 1; }
  /// Dijkstra from `source`; ties are resolved by ascending index.
  std::vector<ExtReal> row(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    double length;
  };
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
};

/// Zigzag distances from one source: shortest paths in the symmetrized
/// edge graph. Unreachable points are at infinity.
std::vector<ExtReal> zigzag_row(const FiniteDSpace& space, std::size_t source);

/// All-pairs zigzag metric. Runs one Dijkstra per source.
ExtendedDistanceMatrix compute_zigzag(const FiniteDSpace& space);

/// Reflexive-transitive closure of the edge relation.
ReachabilityPreorder compute_reachability(const FiniteDSpace& space);

/// A finite d-space together with its zigzag metric and reachability.
class DirectedMetricSpace {
 public:
  explicit DirectedMetricSpace(FiniteDSpace space);

  std::size_t size() const { return space_.size(); }
  const FiniteDSpace& space() const { return space_; }
  const ExtendedDistanceMatrix& zz() const { return zz_; }
  const ReachabilityPreorder& reach() const { return reach_; }

 private:
  FiniteDSpace space_;
  ExtendedDistanceMatrix zz_;
  ReachabilityPreorder reach_;
};

}  // namespace dirmet
