#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace dirmet {

/// Absolute tolerance for equality checks on distances.
inline constexpr double kDistanceTolerance = 1e-9;

/// A nonnegative real number or +infinity.
///
/// Addition saturates at infinity. Subtraction is only exposed through
/// `abs_diff`, which implements the extended rule used by distortion
/// evaluators: |inf - inf| = 0 and |inf - finite| = inf.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr explicit ExtReal(double v) : value_(v) {}

  static constexpr ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }
  static constexpr ExtReal zero() { return ExtReal(0.0); }

  /// Throws std::invalid_argument on negative or NaN input.
  static ExtReal checked(double v) {
    if (std::isnan(v) || v < 0.0) {
      throw std::invalid_argument("extended real must be nonnegative, got " +
                                  std::to_string(v));
    }
    return ExtReal(v);
  }

  constexpr double value() const { return value_; }
  constexpr bool is_finite() const {
    return value_ != std::numeric_limits<double>::infinity();
  }
  constexpr bool is_infinite() const { return !is_finite(); }

  constexpr ExtReal& operator+=(ExtReal o) {
    value_ += o.value_;
    return *this;
  }
  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) { return a += b; }
  friend constexpr ExtReal operator*(double s, ExtReal a) {
    return a.is_finite() ? ExtReal(s * a.value_) : a;
  }

  friend constexpr auto operator<=>(ExtReal a, ExtReal b) {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    return a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;
};

inline constexpr ExtReal abs_diff(ExtReal a, ExtReal b) {
  if (a.is_infinite() && b.is_infinite()) return ExtReal::zero();
  if (a.is_infinite() || b.is_infinite()) return ExtReal::infinity();
  const double d = a.value() - b.value();
  return ExtReal(d < 0 ? -d : d);
}

inline constexpr ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }
inline constexpr ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

/// Equality under extended arithmetic with absolute tolerance.
inline bool approx_equal(ExtReal a, ExtReal b,
                         double tol = kDistanceTolerance) {
  if (a.is_infinite() || b.is_infinite()) return a == b;
  return std::fabs(a.value() - b.value()) <= tol;
}

/// a <= b up to tolerance, under extended arithmetic.
inline bool approx_le(ExtReal a, ExtReal b, double tol = kDistanceTolerance) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.value() <= b.value() + tol;
}

/// Shortest decimal form that round-trips, or "inf".
std::string to_string(ExtReal v);

}  // namespace dirmet
