#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dirmet/space.hpp"

namespace dirmet::tools {

/// Random directed weighted graphs on planar points. The base metric is
/// Euclidean; every edge is a stretched copy of its chord.
struct EnsembleOptions {
  std::size_t min_points = 1;
  std::size_t max_points = 40;
  double min_edge_probability = 0.02;
  double max_edge_probability = 0.25;
  double max_stretch = 1.5;
  /// Add a randomly oriented spanning tree first.
  bool connected = false;
};

/// Independent generator for one named use of a user seed.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt);

FiniteDSpace random_space(std::mt19937_64& rng, const EnsembleOptions& opts);

/// Point i of `space` becomes point perm[i]; labels travel with points.
FiniteDSpace relabel(const FiniteDSpace& space,
                     const std::vector<std::size_t>& perm);

std::vector<std::size_t> random_permutation(std::mt19937_64& rng,
                                            std::size_t n);

/// Every edge gets longer by an amount drawn from [lo, hi].
FiniteDSpace lengthen_edges(const FiniteDSpace& space, std::mt19937_64& rng,
                            double lo, double hi);

}  // namespace dirmet::tools
