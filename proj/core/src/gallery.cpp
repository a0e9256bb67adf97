#include "dirmet/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dirmet::gallery {
namespace {

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string point_label(Point2 p) {
  return "(" + num(p.x) + "," + num(p.y) + ")";
}

double step_length(Step s, std::size_t k) {
  return std::hypot(static_cast<double>(s.dx), static_cast<double>(s.dy)) /
         static_cast<double>(k);
}

}  // namespace

std::vector<Step> GridSpec::default_steps() {
  return {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};
}

std::vector<Step> GridSpec::unit_steps() { return {{1, 0}, {0, 1}, {1, 1}}; }

void validate(const GridSpec& spec) {
  if (spec.k == 0) throw std::invalid_argument("grid: k must be >= 1");
  if (spec.steps.empty()) throw std::invalid_argument("grid: empty step set");
  for (const Step& s : spec.steps) {
    if (s.dx < 0 || s.dy < 0 || (s.dx == 0 && s.dy == 0)) {
      throw std::invalid_argument("grid: step (" + std::to_string(s.dx) + "," +
                                  std::to_string(s.dy) + ") is not monotone");
    }
  }
}

double approximation_ratio(const std::vector<Step>& steps) {
  std::vector<double> angles;
  for (const Step& s : steps) angles.push_back(std::atan2(s.dy, s.dx));
  std::sort(angles.begin(), angles.end());
  constexpr double kRight = std::numbers::pi / 2;
  if (angles.empty() || angles.front() > 1e-12 ||
      angles.back() < kRight - 1e-12) {
    return std::numeric_limits<double>::infinity();
  }
  // Between adjacent step directions at angle gap g, the worst direction is
  // the bisector, where the two-step path is 1 / cos(g / 2) times longer.
  double worst = 1.0;
  for (std::size_t i = 1; i < angles.size(); ++i) {
    worst = std::max(worst, 1.0 / std::cos((angles[i] - angles[i - 1]) / 2));
  }
  return worst;
}

FiniteDSpace directed_interval(std::size_t k) {
  if (k == 0) throw std::invalid_argument("directed_interval: k must be >= 1");
  std::vector<std::string> labels;
  std::vector<Point2> coords;
  std::vector<Edge> edges;
  const double h = 1.0 / static_cast<double>(k);
  for (std::size_t i = 0; i <= k; ++i) {
    const double x = static_cast<double>(i) * h;
    labels.push_back(num(x));
    coords.push_back({x, 0.0});
    if (i < k) edges.push_back({i, i + 1, h});
  }
  return FiniteDSpace(std::move(labels),
                      BaseMetric(EmbeddedMetric{coords, Embedding::kEuclidean}),
                      std::move(edges));
}

FiniteDSpace directed_square_grid(const GridSpec& spec) {
  validate(spec);
  const std::size_t k = spec.k;
  const std::size_t side = k + 1;
  std::vector<std::string> labels;
  std::vector<Point2> coords;
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      const Point2 p{static_cast<double>(i) / k, static_cast<double>(j) / k};
      coords.push_back(p);
      labels.push_back(point_label(p));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      for (const Step& s : spec.steps) {
        const std::size_t ti = i + static_cast<std::size_t>(s.dx);
        const std::size_t tj = j + static_cast<std::size_t>(s.dy);
        if (ti >= side || tj >= side) continue;
        edges.push_back({grid_index(i, j, side), grid_index(ti, tj, side),
                         step_length(s, k)});
      }
    }
  }
  return FiniteDSpace(std::move(labels),
                      BaseMetric(EmbeddedMetric{coords, Embedding::kEuclidean}),
                      std::move(edges));
}

double square_zigzag_oracle(Point2 p, Point2 q) {
  auto inside = [](Point2 a) {
    constexpr double eps = 1e-12;
    return a.x >= -eps && a.x <= 1 + eps && a.y >= -eps && a.y <= 1 + eps;
  };
  if (!inside(p) || !inside(q)) {
    throw std::invalid_argument("square_zigzag_oracle: point outside the square");
  }
  auto dist = [](Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); };
  const bool comparable = (p.x <= q.x && p.y <= q.y) || (q.x <= p.x && q.y <= p.y);
  if (comparable) return dist(p, q);
  const Point2 meet{std::min(p.x, q.x), std::min(p.y, q.y)};
  const Point2 join{std::max(p.x, q.x), std::max(p.y, q.y)};
  return std::min(dist(p, meet) + dist(meet, q), dist(p, join) + dist(join, q));
}

FiniteDSpace source_sink_interval(std::size_t k) {
  if (k == 0) throw std::invalid_argument("source_sink_interval: k must be >= 1");
  const double h = 1.0 / static_cast<double>(k);
  std::vector<std::string> labels;
  std::vector<Point2> coords;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= 2 * k; ++i) {
    const double x = (static_cast<double>(i) - static_cast<double>(k)) * h;
    labels.push_back(num(x));
    coords.push_back({x, 0.0});
  }
  for (std::size_t i = k; i < 2 * k; ++i) edges.push_back({i, i + 1, h});
  for (std::size_t i = k; i > 0; --i) edges.push_back({i, i - 1, h});
  return FiniteDSpace(std::move(labels),
                      BaseMetric(EmbeddedMetric{coords, Embedding::kEuclidean}),
                      std::move(edges));
}

FiniteDSpace flat_torus_grid(const GridSpec& spec) {
  validate(spec);
  const std::size_t k = spec.k;
  std::vector<std::string> labels;
  std::vector<Point2> coords;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const Point2 p{static_cast<double>(i) / k, static_cast<double>(j) / k};
      coords.push_back(p);
      labels.push_back(point_label(p));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      for (const Step& s : spec.steps) {
        const std::size_t ti = (i + static_cast<std::size_t>(s.dx)) % k;
        const std::size_t tj = (j + static_cast<std::size_t>(s.dy)) % k;
        if (ti == i && tj == j) continue;
        edges.push_back(
            {grid_index(i, j, k), grid_index(ti, tj, k), step_length(s, k)});
      }
    }
  }
  return FiniteDSpace(std::move(labels),
                      BaseMetric(EmbeddedMetric{coords, Embedding::kFlatTorus}),
                      std::move(edges));
}

FiniteDSpace open_book(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("open_book: n must be >= 1");
  if (m < 2) throw std::invalid_argument("open_book: m must be >= 2");
  std::vector<std::string> labels{"a", "b"};
  std::vector<Edge> edges;
  for (std::size_t sheet = 1; sheet <= n; ++sheet) {
    const double h = 1.0 / static_cast<double>(sheet * m);
    std::size_t prev = 0;
    for (std::size_t t = 1; t < m; ++t) {
      labels.push_back("s" + std::to_string(sheet) + "_" + std::to_string(t));
      const std::size_t cur = labels.size() - 1;
      edges.push_back({prev, cur, h});
      prev = cur;
    }
    edges.push_back({prev, 1, h});
  }
  return FiniteDSpace::from_edges(std::move(labels), std::move(edges));
}

FiniteDSpace sncf_plane(std::vector<Point2> points) {
  std::erase(points, Point2{0.0, 0.0});
  points.insert(points.begin(), Point2{0.0, 0.0});
  std::vector<std::string> labels;
  for (const Point2& p : points) labels.push_back(point_label(p));

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < points.size(); ++i) {
    edges.push_back({0, i, std::hypot(points[i].x, points[i].y)});
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t j = 1; j < points.size(); ++j) {
      const Point2 p = points[i];
      const Point2 q = points[j];
      const double np = std::hypot(p.x, p.y);
      const double nq = std::hypot(q.x, q.y);
      const double cross = p.x * q.y - p.y * q.x;
      const double dot = p.x * q.x + p.y * q.y;
      if (std::fabs(cross) <= 1e-12 * np * nq && dot > 0 && nq > np) {
        edges.push_back({i, j, std::hypot(q.x - p.x, q.y - p.y)});
      }
    }
  }
  return FiniteDSpace(std::move(labels),
                      BaseMetric(EmbeddedMetric{points, Embedding::kEuclidean}),
                      std::move(edges));
}

FiniteDSpace hollow_square(std::size_t subdivisions) {
  if (subdivisions == 0) {
    throw std::invalid_argument("hollow_square: subdivisions must be >= 1");
  }
  const std::size_t s = subdivisions;
  const double h = 1.0 / static_cast<double>(s);
  std::vector<std::size_t> index((s + 1) * (s + 1), 0);
  std::vector<std::string> labels;
  std::vector<Point2> coords;
  for (std::size_t j = 0; j <= s; ++j) {
    for (std::size_t i = 0; i <= s; ++i) {
      if (i != 0 && i != s && j != 0 && j != s) continue;
      index[grid_index(i, j, s + 1)] = coords.size();
      const Point2 p{static_cast<double>(i) * h, static_cast<double>(j) * h};
      coords.push_back(p);
      labels.push_back(point_label(p));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return index[grid_index(i, j, s + 1)]; };
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < s; ++t) {
    edges.push_back({at(t, 0), at(t + 1, 0), h});  // bottom
    edges.push_back({at(0, t), at(0, t + 1), h});  // left
    edges.push_back({at(s, t), at(s, t + 1), h});  // right
    edges.push_back({at(t, s), at(t + 1, s), h});  // top
  }
  return FiniteDSpace(std::move(labels),
                      BaseMetric(EmbeddedMetric{coords, Embedding::kEuclidean}),
                      std::move(edges));
}

BallGrid ball(const std::vector<ExtReal>& distances_from_center,
              std::size_t center, double radius) {
  BallGrid b{center, radius, {}};
  b.membership.reserve(distances_from_center.size());
  for (ExtReal d : distances_from_center) {
    b.membership.push_back(approx_le(d, ExtReal(radius)));
  }
  return b;
}

namespace {

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<std::vector<Point2>> label_coordinates(const FiniteDSpace& space) {
  std::vector<Point2> out;
  for (const std::string& label : space.labels()) {
    std::string_view s = label;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      s = s.substr(1, s.size() - 2);
      const auto comma = s.find(',');
      if (comma == std::string_view::npos) return std::nullopt;
      auto x = parse_double(s.substr(0, comma));
      auto y = parse_double(s.substr(comma + 1));
      if (!x || !y) return std::nullopt;
      out.push_back({*x, *y});
    } else if (auto x = parse_double(s)) {
      out.push_back({*x, 0.0});
    } else {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace dirmet::gallery
