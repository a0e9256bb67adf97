#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dirmet/ext_real.hpp"

namespace dirmet {

/// Dense n x n matrix of extended reals, row-major.
///
/// Used for both the base metric and the zigzag metric. The metric axioms
/// are not enforced on construction; see `check_extended_metric`.
class ExtendedDistanceMatrix {
 public:
  ExtendedDistanceMatrix() = default;
  /// All off-diagonal entries start at `fill`, diagonal at zero.
  explicit ExtendedDistanceMatrix(std::size_t n,
                                  ExtReal fill = ExtReal::infinity());

  std::size_t size() const { return n_; }

  ExtReal operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  ExtReal& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  /// Sets (i, j) and (j, i).
  void set_symmetric(std::size_t i, std::size_t j, ExtReal v) {
    (*this)(i, j) = v;
    (*this)(j, i) = v;
  }

  std::span<const ExtReal> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  std::span<ExtReal> row(std::size_t i) { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const ExtendedDistanceMatrix&,
                         const ExtendedDistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtReal> data_;
};

/// Entrywise comparison with absolute tolerance (infinities must match).
bool approx_equal(const ExtendedDistanceMatrix& a,
                  const ExtendedDistanceMatrix& b,
                  double tol = kDistanceTolerance);

/// Result of checking the extended-metric axioms.
struct MetricCheck {
  bool ok = true;
  std::size_t i = 0, j = 0, k = 0;  // first offending indices
  const char* violated = "";        // axiom name, empty when ok
};

/// Zero diagonal, symmetry, positivity off the diagonal and the triangle
/// inequality under extended arithmetic. O(n^3).
MetricCheck check_extended_metric(const ExtendedDistanceMatrix& m,
                                  double tol = kDistanceTolerance);

/// Max entry, infinity if any entry is infinite. Throws on n = 0.
ExtReal diameter(const ExtendedDistanceMatrix& m);

/// "y is in the future of x": a reflexive, transitive relation on n points,
/// stored as packed bit rows.
class ReachabilityPreorder {
 public:
  ReachabilityPreorder() = default;
  /// Identity relation on n points.
  explicit ReachabilityPreorder(std::size_t n);

  std::size_t size() const { return n_; }

  bool operator()(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  /// ORs row `src` into row `dst`.
  void merge_row(std::size_t dst, std::size_t src);

  ReachabilityPreorder transpose() const;

  /// reach(i, j) or reach(j, i).
  bool comparable(std::size_t i, std::size_t j) const {
    return (*this)(i, j) || (*this)(j, i);
  }

  friend bool operator==(const ReachabilityPreorder&,
                         const ReachabilityPreorder&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace dirmet
