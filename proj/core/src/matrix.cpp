#include "dirmet/matrix.hpp"

#include <charconv>
#include <stdexcept>

namespace dirmet {

std::string to_string(ExtReal v) {
  if (v.is_infinite()) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v.value());
  return std::string(buf, end);
}

ExtendedDistanceMatrix::ExtendedDistanceMatrix(std::size_t n, ExtReal fill)
    : n_(n), data_(n * n, fill) {
  for (std::size_t i = 0; i < n; ++i) data_[i * n + i] = ExtReal::zero();
}

bool approx_equal(const ExtendedDistanceMatrix& a,
                  const ExtendedDistanceMatrix& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!approx_equal(a(i, j), b(i, j), tol)) return false;
    }
  }
  return true;
}

MetricCheck check_extended_metric(const ExtendedDistanceMatrix& m,
                                  double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != ExtReal::zero()) return {false, i, i, i, "zero diagonal"};
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!approx_equal(m(i, j), m(j, i), tol)) {
        return {false, i, j, j, "symmetry"};
      }
      if (m(i, j).value() <= 0.0) {
        return {false, i, j, j, "identity of indiscernibles"};
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtReal ij = m(i, j);
      if (ij.is_infinite()) continue;
      auto row_j = m.row(j);
      auto row_i = m.row(i);
      for (std::size_t k = 0; k < n; ++k) {
        if (!approx_le(row_i[k], ij + row_j[k], tol)) {
          return {false, i, j, k, "triangle inequality"};
        }
      }
    }
  }
  return {};
}

ExtReal diameter(const ExtendedDistanceMatrix& m) {
  if (m.size() == 0) throw std::invalid_argument("diameter of an empty space");
  ExtReal best = ExtReal::zero();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (ExtReal v : m.row(i)) best = max(best, v);
  }
  return best;
}

ReachabilityPreorder::ReachabilityPreorder(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  for (std::size_t i = 0; i < n; ++i) set(i, i);
}

void ReachabilityPreorder::merge_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = bits_.data() + dst * words_;
  const std::uint64_t* s = bits_.data() + src * words_;
  for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
}

ReachabilityPreorder ReachabilityPreorder::transpose() const {
  ReachabilityPreorder t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j)) t.set(j, i);
    }
  }
  return t;
}

}  // namespace dirmet
