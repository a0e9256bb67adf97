#pragma once

#include <cstddef>
#include <vector>

#include "dirmet/space.hpp"

namespace dirmet {

/// Same points and base metric, every edge reversed.
FiniteDSpace reverse(const FiniteDSpace& space);

/// Concatenated point sets; cross base distances are infinite and there
/// are no cross edges. Points of `b` are shifted by `a.size()`.
FiniteDSpace disjoint_union(const FiniteDSpace& a, const FiniteDSpace& b);

/// Points (i, j) at index i * b.size() + j with the sum metric
/// d_a(i, i') + d_b(j, j'). Edges move in one factor, the other, or both
/// at once; lengths add.
FiniteDSpace product(const FiniteDSpace& a, const FiniteDSpace& b);

/// Result of gluing: the quotient space plus the class of every original
/// point in it.
struct QuotientResult {
  FiniteDSpace space;
  std::vector<std::size_t> class_of;
};

/// Glues each class to one point. The base metric is the chain metric
/// (infimum of sums of base distances with jumps inside classes). Classes at
/// chain distance 0 are merged so the result is a metric. Self loops that
/// appear after gluing are dropped.
///
/// Throws std::invalid_argument if `classes` is not a partition of the
/// points or contains an empty class.
QuotientResult quotient(const FiniteDSpace& space,
                        const std::vector<std::vector<std::size_t>>& classes);

}  // namespace dirmet
