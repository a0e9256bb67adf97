#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "dirmet/distortion.hpp"

namespace dirmet {

/// Limits that decide when a search is exhaustive.
struct SearchBudget {
  /// gh_distance is exact when |X| * |Y| <= this.
  std::size_t exhaustive_gh = 16;
  /// dcorrespondence_distance is exact when |X| * |Y| <= this.
  std::size_t exhaustive_cdis = 12;
  /// distortion_distance is exact when |Y|^|X| * |X|^|Y| <= this.
  double exhaustive_map_pairs = 1e7;
  /// Local-search restarts for the non-exhaustive regimes.
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  /// Node cap for the map-infimum lower bound; the bound is dropped if the
  /// search does not finish.
  std::size_t lower_bound_nodes = 2'000'000;
};

/// A pair of maps f: X -> Y, g: Y -> X as image tables.
struct MapPair {
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;
  friend bool operator==(const MapPair&, const MapPair&) = default;
};

/// Witness for a reported value: nothing (no witness exists), a map pair,
/// or a relation.
using Certificate =
    std::variant<std::monostate, MapPair, std::vector<PointPair>>;

struct DistanceReport {
  ExtReal value = ExtReal::infinity();
  /// Best proven lower bound; equals `value` when exact.
  ExtReal lower_bound = ExtReal::zero();
  /// True iff the search was exhaustive (or infeasibility was proven).
  bool exact = false;
  Certificate certificate;
};

enum class DistanceKind { kGromovHausdorff, kDistortion, kDCorrespondence };

std::string_view to_string(DistanceKind kind);

/// Half the minimum distortion over correspondences between two metrics.
/// Exhaustive branch-and-bound when nx * ny <= budget.exhaustive_gh,
/// otherwise a local-search upper bound with exact = false.
DistanceReport gh_distance(const ExtendedDistanceMatrix& dx,
                           const ExtendedDistanceMatrix& dy,
                           const SearchBudget& budget = {});

/// Directed Gromov-Hausdorff distance: gh_distance on the zigzag metrics.
DistanceReport gh_distance(const DirectedMetricSpace& x,
                           const DirectedMetricSpace& y,
                           const SearchBudget& budget = {});

/// Half the infimum over d-map pairs of max{dis f, dis g, codis(f, g)}.
DistanceReport distortion_distance(const DirectedMetricSpace& x,
                                   const DirectedMetricSpace& y,
                                   const SearchBudget& budget = {});

/// Half the minimum distortion over d-correspondences; infinite when none
/// exists.
DistanceReport dcorrespondence_distance(const DirectedMetricSpace& x,
                                        const DirectedMetricSpace& y,
                                        const SearchBudget& budget = {});

/// Recomputes the value a certificate witnesses (already halved).
/// Returns infinity for an empty certificate.
ExtReal evaluate_certificate(DistanceKind kind, const Certificate& cert,
                             const DirectedMetricSpace& x,
                             const DirectedMetricSpace& y);

/// The chain d_GH(base) <= gh <= dis <= cdis for one pair of spaces.
struct ChainReport {
  DistanceReport gh_base;
  DistanceReport gh;
  DistanceReport dis;
  DistanceReport cdis;
  /// All four searches were exhaustive.
  bool conclusive = false;
  /// The chain holds (only meaningful when conclusive).
  bool holds = false;
};

ChainReport verify_chain(const DirectedMetricSpace& x,
                         const DirectedMetricSpace& y,
                         const SearchBudget& budget = {});

}  // namespace dirmet
