#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "dirmet/space.hpp"

namespace dirmet::gallery {

/// A monotone lattice step (dx, dy) with dx, dy >= 0, not both zero.
struct Step {
  int dx = 0;
  int dy = 0;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Subdivision count and step set for directed grids on the unit square.
/// Each step's length is its Euclidean norm divided by k.
struct GridSpec {
  std::size_t k = 1;
  std::vector<Step> steps = default_steps();

  /// {(1,0), (0,1), (1,1), (2,1), (1,2)}.
  static std::vector<Step> default_steps();
  /// {(1,0), (0,1), (1,1)}.
  static std::vector<Step> unit_steps();
};

/// Throws std::invalid_argument for k = 0, an empty step set or a step
/// that is not monotone.
void validate(const GridSpec& spec);

/// Worst ratio of step-path length to Euclidean length over the directions
/// of the positive quadrant. Infinite if the steps do not span both axes.
double approximation_ratio(const std::vector<Step>& steps);

/// Index of lattice point (i, j) in grids with `side` points per row.
inline std::size_t grid_index(std::size_t i, std::size_t j, std::size_t side) {
  return j * side + i;
}

/// k + 1 points at i / k, edges i -> i + 1.
FiniteDSpace directed_interval(std::size_t k);

/// (k + 1)^2 points of the unit square with monotone step edges clipped to
/// the square. Base metric is Euclidean. Labels are "(x,y)".
FiniteDSpace directed_square_grid(const GridSpec& spec);

/// Zigzag distance in the continuous directed unit square with the
/// Euclidean length: |p - q| for comparable points, otherwise the shorter
/// route through the meet or the join. Throws outside the square.
double square_zigzag_oracle(Point2 p, Point2 q);

/// 2k + 1 points of [-1, 1]; both arms directed away from 0.
FiniteDSpace source_sink_interval(std::size_t k);

/// k^2 points of the flat torus; steps wrap around both seams. Base metric
/// is the flat-torus L2 metric.
FiniteDSpace flat_torus_grid(const GridSpec& spec);

/// Points a (index 0) and b (index 1) joined by n directed arcs; arc j has
/// m edges and total length 1 / j. Base is the induced path metric.
FiniteDSpace open_book(std::size_t n, std::size_t m);

/// Plane samples with generators 0 -> p and same-ray edges p -> s p, s > 1.
/// The origin is inserted at index 0 if absent.
FiniteDSpace sncf_plane(std::vector<Point2> points);

/// Boundary of the unit square with monotone edges, each side split into
/// `subdivisions` edges.
FiniteDSpace hollow_square(std::size_t subdivisions = 1);

/// Membership of every point in a closed ball of a metric row.
struct BallGrid {
  std::size_t center = 0;
  double radius = 0.0;
  std::vector<bool> membership;
};

BallGrid ball(const std::vector<ExtReal>& distances_from_center,
              std::size_t center, double radius);

/// Coordinates parsed from labels of the form "(x,y)" or "x", if every
/// label has one.
std::optional<std::vector<Point2>> label_coordinates(
    const FiniteDSpace& space);

}  // namespace dirmet::gallery
