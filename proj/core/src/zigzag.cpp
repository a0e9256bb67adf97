#include "dirmet/zigzag.hpp"

#include <functional>
#include <queue>
#include <utility>

namespace dirmet {

ZigzagEngine::ZigzagEngine(const FiniteDSpace& space)
    : offsets_(space.size() + 1, 0) {
  for (const Edge& e : space.edges()) {
    ++offsets_[e.src + 1];
    ++offsets_[e.dst + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    offsets_[i] += offsets_[i - 1];
  }
  arcs_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : space.edges()) {
    arcs_[fill[e.src]++] = {e.dst, e.length};
    arcs_[fill[e.dst]++] = {e.src, e.length};
  }
}

std::vector<ExtReal> ZigzagEngine::row(std::size_t source) const {
  const double inf = ExtReal::infinity().value();
  std::vector<double> dist(size(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (std::size_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
      const double nd = d + arcs_[a].length;
      if (nd < dist[arcs_[a].to]) {
        dist[arcs_[a].to] = nd;
        queue.emplace(nd, arcs_[a].to);
      }
    }
  }
  std::vector<ExtReal> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ExtReal(dist[i]);
  return out;
}

std::vector<ExtReal> zigzag_row(const FiniteDSpace& space,
                                std::size_t source) {
  return ZigzagEngine(space).row(source);
}

ExtendedDistanceMatrix compute_zigzag(const FiniteDSpace& space) {
  const ZigzagEngine engine(space);
  const std::size_t n = space.size();
  ExtendedDistanceMatrix zz(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto row = engine.row(s);
    std::copy(row.begin(), row.end(), zz.row(s).begin());
  }
  // Floating-point sums along a path depend on the direction of traversal;
  // keep the matrix exactly symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      zz.set_symmetric(i, j, min(zz(i, j), zz(j, i)));
    }
  }
  return zz;
}

ReachabilityPreorder compute_reachability(const FiniteDSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const Edge& e : space.edges()) out[e.src].push_back(e.dst);

  ReachabilityPreorder reach(n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    stack.assign(1, s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : out[u]) {
        if (!reach(s, v)) {
          reach.set(s, v);
          stack.push_back(v);
        }
      }
    }
  }
  return reach;
}

DirectedMetricSpace::DirectedMetricSpace(FiniteDSpace space)
    : space_(std::move(space)),
      zz_(compute_zigzag(space_)),
      reach_(compute_reachability(space_)) {}

}  // namespace dirmet
