#pragma once

#include "dirmet/matrix.hpp"

namespace dirmet::tools {

/// Half the minimum distortion over all correspondences, found by listing
/// every subset of X x Y. Shares no code with the branch and bound; meant
/// for |X| * |Y| <= 20.
ExtReal naive_gh(const ExtendedDistanceMatrix& dx,
                 const ExtendedDistanceMatrix& dy);

}  // namespace dirmet::tools
