#include "dirmet_tools/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dirmet::tools {

ExtReal naive_gh(const ExtendedDistanceMatrix& dx,
                 const ExtendedDistanceMatrix& dy) {
  const std::size_t nx = dx.size();
  const std::size_t ny = dy.size();
  const std::size_t cells = nx * ny;
  if (cells == 0 || cells > 20) throw std::invalid_argument("naive_gh: size");

  // Plain doubles with the extended rule written out again.
  auto gap = [](double a, double b) {
    const bool ia = std::isinf(a), ib = std::isinf(b);
    if (ia && ib) return 0.0;
    if (ia || ib) return std::numeric_limits<double>::infinity();
    return std::fabs(a - b);
  };

  double best = std::numeric_limits<double>::infinity();
  bool any = false;
  std::vector<std::size_t> xs, ys;
  for (unsigned long mask = 1; mask < (1ul << cells); ++mask) {
    xs.clear();
    ys.clear();
    std::vector<bool> hit_x(nx, false), hit_y(ny, false);
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask & (1ul << c)) {
        xs.push_back(c / ny);
        ys.push_back(c % ny);
        hit_x[c / ny] = true;
        hit_y[c % ny] = true;
      }
    }
    bool total = true;
    for (bool h : hit_x) total = total && h;
    for (bool h : hit_y) total = total && h;
    if (!total) continue;
    double worst = 0.0;
    for (std::size_t a = 0; a < xs.size(); ++a) {
      for (std::size_t b = 0; b < xs.size(); ++b) {
        const double g = gap(dx(xs[a], xs[b]).value(), dy(ys[a], ys[b]).value());
        if (g > worst) worst = g;
      }
    }
    if (!any || worst < best) best = worst;
    any = true;
  }
  return ExtReal(0.5 * best);
}

}  // namespace dirmet::tools
