#include "dirmet/distortion.hpp"

#include <stdexcept>
#include <string>

namespace dirmet {
namespace {

void require_nonempty(std::span<const std::size_t> s, const char* name) {
  if (s.empty()) {
    throw std::invalid_argument(std::string("hausdorff: subset ") + name +
                                " is empty");
  }
}

ExtReal one_sided(const ExtendedDistanceMatrix& m,
                  std::span<const std::size_t> from,
                  std::span<const std::size_t> to) {
  ExtReal sup = ExtReal::zero();
  for (std::size_t a : from) {
    ExtReal inf = ExtReal::infinity();
    for (std::size_t b : to) inf = min(inf, m(a, b));
    sup = max(sup, inf);
  }
  return sup;
}

}  // namespace

ExtReal hausdorff(const ExtendedDistanceMatrix& m,
                  std::span<const std::size_t> a,
                  std::span<const std::size_t> b) {
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  for (std::size_t p : a) {
    if (p >= m.size()) throw std::invalid_argument("hausdorff: index out of range");
  }
  for (std::size_t p : b) {
    if (p >= m.size()) throw std::invalid_argument("hausdorff: index out of range");
  }
  return max(one_sided(m, a, b), one_sided(m, b, a));
}

ExtReal directed_hausdorff(const DirectedMetricSpace& z,
                           std::span<const std::size_t> a,
                           std::span<const std::size_t> b) {
  return hausdorff(z.zz(), a, b);
}

ExtReal distortion(std::span<const PointPair> relation,
                   const ExtendedDistanceMatrix& dx,
                   const ExtendedDistanceMatrix& dy) {
  if (relation.empty()) {
    throw std::invalid_argument("distortion of an empty relation");
  }
  ExtReal sup = ExtReal::zero();
  for (std::size_t p = 0; p < relation.size(); ++p) {
    for (std::size_t q = p + 1; q < relation.size(); ++q) {
      const auto [x, y] = relation[p];
      const auto [x2, y2] = relation[q];
      sup = max(sup, abs_diff(dx(x, x2), dy(y, y2)));
    }
  }
  return sup;
}

ExtReal map_distortion(std::span<const std::size_t> f,
                       const ExtendedDistanceMatrix& dx,
                       const ExtendedDistanceMatrix& dy) {
  ExtReal sup = ExtReal::zero();
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t x2 = x + 1; x2 < f.size(); ++x2) {
      sup = max(sup, abs_diff(dx(x, x2), dy(f[x], f[x2])));
    }
  }
  return sup;
}

ExtReal codistortion(std::span<const std::size_t> f,
                     std::span<const std::size_t> g,
                     const ExtendedDistanceMatrix& dx,
                     const ExtendedDistanceMatrix& dy) {
  ExtReal sup = ExtReal::zero();
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      sup = max(sup, abs_diff(dx(x, g[y]), dy(f[x], y)));
    }
  }
  return sup;
}

bool sends_edges_forward(std::span<const std::size_t> f,
                         const FiniteDSpace& from,
                         const ReachabilityPreorder& reach_to) {
  for (const Edge& e : from.edges()) {
    if (!reach_to(f[e.src], f[e.dst])) return false;
  }
  return true;
}

VertexMap::VertexMap(const DirectedMetricSpace& from,
                     const DirectedMetricSpace& to,
                     std::vector<std::size_t> image)
    : from_(&from), to_(&to), image_(std::move(image)) {
  if (image_.size() != from.size()) {
    throw std::invalid_argument("vertex map: image table has " +
                                std::to_string(image_.size()) +
                                " entries for " + std::to_string(from.size()) +
                                " points");
  }
  for (std::size_t y : image_) {
    if (y >= to.size()) throw std::invalid_argument("vertex map: image out of range");
  }
}

bool VertexMap::is_dmap() const {
  return sends_edges_forward(image_, from_->space(), to_->reach());
}

ExtReal distortion(const VertexMap& f) {
  return map_distortion(f.image(), f.from().zz(), f.to().zz());
}

ExtReal codistortion(const VertexMap& f, const VertexMap& g) {
  if (&f.from() != &g.to() || &f.to() != &g.from()) {
    throw std::invalid_argument(
        "codistortion: maps must go X -> Y and Y -> X over the same spaces");
  }
  return codistortion(f.image(), g.image(), f.from().zz(), f.to().zz());
}

bool is_disometry(const VertexMap& f) {
  if (!f.is_dmap()) return false;
  const auto& dx = f.from().zz();
  const auto& dy = f.to().zz();
  for (std::size_t x = 0; x < f.from().size(); ++x) {
    for (std::size_t x2 = x + 1; x2 < f.from().size(); ++x2) {
      if (!approx_equal(dx(x, x2), dy(f(x), f(x2)))) return false;
    }
  }
  return true;
}

bool is_correspondence(std::span<const PointPair> relation, std::size_t nx,
                       std::size_t ny) {
  std::vector<bool> left(nx, false), right(ny, false);
  for (auto [x, y] : relation) {
    if (x >= nx || y >= ny) return false;
    left[x] = true;
    right[y] = true;
  }
  for (bool b : left) {
    if (!b) return false;
  }
  for (bool b : right) {
    if (!b) return false;
  }
  return true;
}

Correspondence::Correspondence(std::size_t nx, std::size_t ny,
                               std::vector<PointPair> pairs)
    : pairs_(std::move(pairs)) {
  if (!is_correspondence(pairs_, nx, ny)) {
    throw std::invalid_argument(
        "correspondence must cover every point of both sides");
  }
}

bool Correspondence::is_dcorrespondence(
    const ReachabilityPreorder& reach_x,
    const ReachabilityPreorder& reach_y) const {
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs_.size(); ++q) {
      if (!dcompatible(reach_x, reach_y, pairs_[p], pairs_[q])) return false;
    }
  }
  return true;
}

}  // namespace dirmet
