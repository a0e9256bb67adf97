#include "dirmet_tools/ensemble.hpp"

#include <algorithm>
#include <numeric>

namespace dirmet::tools {

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt),
                    static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

FiniteDSpace random_space(std::mt19937_64& rng, const EnsembleOptions& opts) {
  std::uniform_int_distribution<std::size_t> size(opts.min_points,
                                                  opts.max_points);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> stretch(1.0, opts.max_stretch);
  const std::size_t n = size(rng);
  const double p = std::uniform_real_distribution<double>(
      opts.min_edge_probability, opts.max_edge_probability)(rng);

  std::vector<Point2> pts(n);
  for (auto& q : pts) q = {unit(rng), unit(rng)};
  auto chord = [&](std::size_t a, std::size_t b) {
    return embedded_distance(pts[a], pts[b], Embedding::kEuclidean);
  };

  std::vector<Edge> edges;
  if (opts.connected) {
    for (std::size_t v = 1; v < n; ++v) {
      const std::size_t u =
          std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
      const bool forward = unit(rng) < 0.5;
      const double len = chord(u, v) * stretch(rng);
      edges.push_back(forward ? Edge{u, v, len} : Edge{v, u, len});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && unit(rng) < p) edges.push_back({a, b, chord(a, b) * stretch(rng)});
    }
  }
  EmbeddedMetric base{std::move(pts), Embedding::kEuclidean};
  return FiniteDSpace(index_labels(n),
                      BaseMetric(BaseMetric(std::move(base)).materialize()),
                      std::move(edges));
}

FiniteDSpace relabel(const FiniteDSpace& space,
                     const std::vector<std::size_t>& perm) {
  const std::size_t n = space.size();
  std::vector<std::string> labels(n);
  ExtendedDistanceMatrix base(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = space.label(i);
    for (std::size_t j = 0; j < n; ++j) base(perm[i], perm[j]) = space.base()(i, j);
  }
  std::vector<Edge> edges;
  for (const Edge& e : space.edges()) edges.push_back({perm[e.src], perm[e.dst], e.length});
  return FiniteDSpace(std::move(labels), BaseMetric(std::move(base)), std::move(edges));
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng,
                                            std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

FiniteDSpace lengthen_edges(const FiniteDSpace& space, std::mt19937_64& rng,
                            double lo, double hi) {
  std::uniform_real_distribution<double> delta(lo, hi);
  std::vector<Edge> edges = space.edges();
  for (Edge& e : edges) e.length += delta(rng);
  return FiniteDSpace(space.labels(), space.base(), std::move(edges));
}

}  // namespace dirmet::tools
