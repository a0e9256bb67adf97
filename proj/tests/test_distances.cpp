#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "dirmet/constructions.hpp"
#include "dirmet/distances.hpp"
#include "dirmet/gallery.hpp"
#include "dirmet_tools/ensemble.hpp"
#include "dirmet_tools/oracles.hpp"

using namespace dirmet;

namespace {

using Pair = std::pair<FiniteDSpace, FiniteDSpace>;

std::vector<Pair> small_pairs(std::uint64_t seed, std::size_t count,
                              std::size_t max_points = 3, bool connected = false) {
  auto rng = tools::stream(seed, 7);
  tools::EnsembleOptions opts;
  opts.min_points = 1;
  opts.max_points = max_points;
  opts.min_edge_probability = 0.2;
  opts.max_edge_probability = 0.7;
  opts.connected = connected;
  std::vector<Pair> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto x = tools::random_space(rng, opts);
    auto y = tools::random_space(rng, opts);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

FiniteDSpace segment(double length) {
  return FiniteDSpace::from_edges(index_labels(2), {{0, 1, length}});
}

FiniteDSpace point() {
  return FiniteDSpace(index_labels(1), BaseMetric(ExtendedDistanceMatrix(1)), {});
}

/// Half the least distortion over d-correspondences, by listing subsets.
ExtReal naive_cdis(const DirectedMetricSpace& x, const DirectedMetricSpace& y) {
  const std::size_t nx = x.size(), ny = y.size(), cells = nx * ny;
  ExtReal best = ExtReal::infinity();
  for (unsigned long mask = 1; mask < (1ul << cells); ++mask) {
    std::vector<PointPair> rel;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask & (1ul << c)) rel.push_back({c / ny, c % ny});
    }
    if (!is_correspondence(rel, nx, ny)) continue;
    if (!Correspondence(nx, ny, rel).is_dcorrespondence(x.reach(), y.reach())) continue;
    best = min(best, distortion(rel, x.zz(), y.zz()));
  }
  return 0.5 * best;
}

}  // namespace

// --- Hausdorff --------------------------------------------------------------

TEST(Hausdorff, Cases) {
  const DirectedMetricSpace z(gallery::directed_interval(4));
  const std::vector<std::size_t> all{0, 1, 2, 3, 4}, a{0}, b{4};
  EXPECT_EQ(hausdorff(z.zz(), all, all), ExtReal::zero());
  EXPECT_EQ(hausdorff(z.zz(), a, all), z.zz()(0, 4));
  // sup-inf written out for singletons: max(d(0, 4), d(4, 0)).
  EXPECT_EQ(hausdorff(z.zz(), a, b), max(z.zz()(0, 4), z.zz()(4, 0)));
  EXPECT_NEAR(hausdorff(z.zz(), a, b).value(), 1.0, 1e-12);
  EXPECT_THROW(hausdorff(z.zz(), {}, a), std::invalid_argument);
}

TEST(DirectedHausdorff, Cases) {
  const DirectedMetricSpace z(disjoint_union(gallery::directed_interval(2),
                                             gallery::hollow_square()));
  const std::vector<std::size_t> a{0, 2}, b{3, 4}, c{1};
  EXPECT_EQ(directed_hausdorff(z, a, a), ExtReal::zero());
  EXPECT_TRUE(directed_hausdorff(z, a, b).is_infinite());
  EXPECT_EQ(directed_hausdorff(z, a, c), hausdorff(z.zz(), a, c));
  EXPECT_THROW(directed_hausdorff(z, a, {}), std::invalid_argument);
}

// --- distortion and codistortion --------------------------------------------

TEST(Distortion, Relations) {
  const DirectedMetricSpace x(segment(1.0)), y(segment(3.0));
  const std::vector<PointPair> id{{0, 0}, {1, 1}}, one{{0, 1}};
  EXPECT_EQ(distortion(id, x.zz(), x.zz()), ExtReal::zero());
  EXPECT_EQ(distortion(one, x.zz(), y.zz()), ExtReal::zero());
  // Pair-pairs: (0,0)(0,0) 0, (0,0)(1,1) |1-3|, (1,1)(0,0) |1-3|, (1,1)(1,1) 0.
  EXPECT_EQ(distortion(id, x.zz(), y.zz()), ExtReal(2.0));
  EXPECT_THROW(distortion(std::vector<PointPair>{}, x.zz(), y.zz()), std::invalid_argument);
}

TEST(Distortion, InfinityPatterns) {
  const auto u = DirectedMetricSpace(disjoint_union(point(), point()));
  const auto v = DirectedMetricSpace(segment(1.0));
  const std::vector<PointPair> id{{0, 0}, {1, 1}};
  EXPECT_EQ(distortion(id, u.zz(), u.zz()), ExtReal::zero());
  EXPECT_TRUE(distortion(id, u.zz(), v.zz()).is_infinite());
}

TEST(Codistortion, InverseIsometries) {
  const auto s = gallery::source_sink_interval(2);
  const DirectedMetricSpace x(s);
  std::vector<std::size_t> id(s.size());
  std::iota(id.begin(), id.end(), 0);
  const VertexMap f(x, x, id), g(x, x, id);
  EXPECT_EQ(codistortion(f, g), ExtReal::zero());
  EXPECT_EQ(distortion(f), ExtReal::zero());
}

TEST(Codistortion, ConstantMaps) {
  const DirectedMetricSpace x(gallery::hollow_square()), y(gallery::source_sink_interval(2));
  const std::size_t x0 = 1, y0 = 3;
  const VertexMap f(x, y, std::vector<std::size_t>(x.size(), y0));
  const VertexMap g(y, x, std::vector<std::size_t>(y.size(), x0));
  ExtReal want = ExtReal::zero();
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      want = max(want, abs_diff(x.zz()(a, x0), y.zz()(y0, b)));
    }
  }
  EXPECT_EQ(codistortion(f, g), want);
  EXPECT_LE(want, max(diameter(x.zz()), diameter(y.zz())));
  EXPECT_TRUE(f.is_dmap());
}

TEST(Codistortion, SourceSinkPair) {
  constexpr std::size_t k = 8;
  const auto s = gallery::source_sink_interval(k);
  const DirectedMetricSpace x(s), xr(reverse(s));
  // Positions (i - k) / k. f folds the left arm to -1 and shifts the right
  // arm onto the left; g shifts the left arm onto the right and folds the
  // right arm to 1.
  std::vector<std::size_t> f(s.size()), g(s.size());
  for (std::size_t i = 0; i <= 2 * k; ++i) {
    f[i] = i <= k ? 0 : i - k;
    g[i] = i <= k ? i + k : 2 * k;
  }
  const VertexMap vf(x, xr, f), vg(xr, x, g);
  EXPECT_TRUE(vf.is_dmap());
  EXPECT_TRUE(vg.is_dmap());
  EXPECT_NEAR(distortion(vf).value(), 1.0, 1e-9);
  EXPECT_NEAR(distortion(vg).value(), 1.0, 1e-9);
  EXPECT_NEAR(codistortion(vf, vg).value(), 1.0, 1e-9);
}

TEST(Codistortion, RejectsMismatchedSpaces) {
  const DirectedMetricSpace x(segment(1.0)), y(segment(2.0));
  const VertexMap f(x, y, {0, 1}), g(x, y, {0, 1});
  EXPECT_THROW(codistortion(f, g), std::invalid_argument);
}

TEST(VertexMap, RejectsBadImage) {
  const DirectedMetricSpace x(segment(1.0));
  EXPECT_THROW(VertexMap(x, x, {0}), std::invalid_argument);
  EXPECT_THROW(VertexMap(x, x, {0, 2}), std::invalid_argument);
}

TEST(VertexMap, DMapCriterion) {
  const DirectedMetricSpace x(segment(1.0));
  EXPECT_TRUE(VertexMap(x, x, {0, 1}).is_dmap());
  EXPECT_FALSE(VertexMap(x, x, {1, 0}).is_dmap());
  EXPECT_TRUE(VertexMap(x, x, {1, 1}).is_dmap());
}

TEST(Disometry, Cases) {
  const auto s = gallery::hollow_square();
  const DirectedMetricSpace x(s);
  EXPECT_TRUE(is_disometry(VertexMap(x, x, {0, 1, 2, 3})));
  EXPECT_FALSE(is_disometry(VertexMap(x, x, {2, 2, 2, 2})));
  // Swapping (1,0) and (0,1) is a symmetry of the hollow square.
  EXPECT_TRUE(is_disometry(VertexMap(x, x, {0, 2, 1, 3})));
  // Reversal is not a d-map.
  EXPECT_FALSE(is_disometry(VertexMap(x, x, {3, 1, 2, 0})));
}

TEST(Disometry, Relabeling) {
  auto rng = tools::stream(3, 3);
  tools::EnsembleOptions opts;
  opts.min_points = opts.max_points = 6;
  opts.connected = true;
  const auto s = tools::random_space(rng, opts);
  const auto perm = tools::random_permutation(rng, s.size());
  const DirectedMetricSpace x(s), y(tools::relabel(s, perm));
  EXPECT_TRUE(is_disometry(VertexMap(x, y, perm)));
}

TEST(Correspondence, Validation) {
  EXPECT_THROW(Correspondence(2, 2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Correspondence(2, 2, {{0, 0}, {1, 2}}), std::invalid_argument);
  EXPECT_NO_THROW(Correspondence(2, 2, {{0, 0}, {1, 1}}));
}

// --- gh_distance ------------------------------------------------------------

TEST(Gh, SelfIsZero) {
  const DirectedMetricSpace x(gallery::source_sink_interval(1));
  const auto r = gh_distance(x, x);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, ExtReal::zero());
}

TEST(Gh, ReverseIsZero) {
  for (const auto& [sx, sy] : small_pairs(21, 10, 4, true)) {
    const DirectedMetricSpace x(sx), xr(reverse(sx));
    const auto r = gh_distance(x, xr);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, ExtReal::zero());
  }
}

TEST(Gh, OnePointIsHalfDiameter) {
  const DirectedMetricSpace p(point());
  for (const auto& s : {gallery::hollow_square(), gallery::source_sink_interval(3),
                        gallery::directed_interval(5)}) {
    const DirectedMetricSpace y(s);
    SearchBudget b;
    b.exhaustive_gh = 64;
    const auto r = gh_distance(p, y, b);
    EXPECT_NEAR(r.value.value(), 0.5 * diameter(y.zz()).value(), 1e-12);
  }
}

TEST(Gh, AgreesWithNaiveListing) {
  for (const auto& [sx, sy] : small_pairs(22, 40)) {
    const DirectedMetricSpace x(sx), y(sy);
    const auto r = gh_distance(x, y);
    ASSERT_TRUE(r.exact);
    EXPECT_TRUE(approx_equal(r.value, tools::naive_gh(x.zz(), y.zz())));
  }
}

TEST(Gh, Symmetric) {
  for (const auto& [sx, sy] : small_pairs(23, 20, 4)) {
    const DirectedMetricSpace x(sx), y(sy);
    const auto xy = gh_distance(x, y), yx = gh_distance(y, x);
    if (xy.exact && yx.exact) EXPECT_TRUE(approx_equal(xy.value, yx.value));
  }
}

TEST(Gh, BoundedByHalfMaxDiameter) {
  for (const auto& [sx, sy] : small_pairs(24, 20, 3, true)) {
    const DirectedMetricSpace x(sx), y(sy);
    EXPECT_TRUE(approx_le(gh_distance(x, y).value,
                          0.5 * max(diameter(x.zz()), diameter(y.zz()))));
  }
}

TEST(Gh, BeyondBudgetIsBracketed) {
  const DirectedMetricSpace x(gallery::hollow_square(2)), y(gallery::source_sink_interval(3));
  const auto r = gh_distance(x, y);
  EXPECT_EQ(r.exact, r.lower_bound == r.value);
  EXPECT_TRUE(approx_le(r.lower_bound, r.value));
  EXPECT_TRUE(approx_le(0.5 * abs_diff(diameter(x.zz()), diameter(y.zz())), r.lower_bound));
  EXPECT_TRUE(approx_equal(evaluate_certificate(DistanceKind::kGromovHausdorff,
                                                r.certificate, x, y),
                           r.value));
}

TEST(Gh, RejectsEmpty) {
  EXPECT_THROW(gh_distance(ExtendedDistanceMatrix(0), ExtendedDistanceMatrix(1)),
               std::invalid_argument);
}

// --- distortion_distance ----------------------------------------------------

TEST(Dis, RelabeledCopyIsZero) {
  for (const auto& [sx, unused] : small_pairs(31, 8, 5, true)) {
    auto rng = tools::stream(31, sx.size());
    const auto perm = tools::random_permutation(rng, sx.size());
    const DirectedMetricSpace x(sx), y(tools::relabel(sx, perm));
    const auto r = distortion_distance(x, y);
    EXPECT_TRUE(r.exact);
    EXPECT_NEAR(r.value.value(), 0.0, 1e-9);
  }
}

TEST(Dis, SourceSinkExactAtSmallK) {
  const auto s = gallery::source_sink_interval(2);
  const DirectedMetricSpace x(s), xr(reverse(s));
  const auto r = distortion_distance(x, xr);
  EXPECT_TRUE(r.exact);
  EXPECT_NEAR(r.value.value(), 0.5, 1e-9);
}

TEST(Dis, SourceSinkSearch) {
  const auto s = gallery::source_sink_interval(8);
  const DirectedMetricSpace x(s), xr(reverse(s));
  const auto r = distortion_distance(x, xr);
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(r.value.value(), 0.5, 2.0 / 8);
  EXPECT_TRUE(approx_equal(
      evaluate_certificate(DistanceKind::kDistortion, r.certificate, x, xr), r.value));
}

TEST(Dis, OnePointIsHalfDiameter) {
  const DirectedMetricSpace p(point());
  const DirectedMetricSpace y(gallery::hollow_square());
  // Only constant maps exist from a point; g must be constant too.
  ExtReal best = ExtReal::infinity();
  for (std::size_t y0 = 0; y0 < y.size(); ++y0) {
    ExtReal codis = ExtReal::zero();
    for (std::size_t b = 0; b < y.size(); ++b) codis = max(codis, y.zz()(y0, b));
    best = min(best, max(diameter(y.zz()), codis));
  }
  const auto r = distortion_distance(p, y);
  EXPECT_TRUE(r.exact);
  EXPECT_NEAR(r.value.value(), 0.5 * best.value(), 1e-12);
  EXPECT_NEAR(r.value.value(), 0.5 * diameter(y.zz()).value(), 1e-12);
}

TEST(Dis, AtLeastGhAndBounded) {
  for (const auto& [sx, sy] : small_pairs(32, 25, 3, true)) {
    const DirectedMetricSpace x(sx), y(sy);
    const auto dis = distortion_distance(x, y);
    ASSERT_TRUE(dis.exact);
    EXPECT_TRUE(approx_le(gh_distance(x, y).value, dis.value));
    EXPECT_TRUE(approx_le(dis.value, 0.5 * max(diameter(x.zz()), diameter(y.zz()))));
  }
}

TEST(Dis, TriangleInequality) {
  const auto pairs = small_pairs(33, 12, 3, true);
  for (std::size_t i = 0; i + 2 < pairs.size(); ++i) {
    const DirectedMetricSpace a(pairs[i].first), b(pairs[i + 1].first), c(pairs[i + 2].second);
    EXPECT_TRUE(approx_le(distortion_distance(a, c).value,
                          distortion_distance(a, b).value + distortion_distance(b, c).value));
  }
}

TEST(Dis, ZeroCertificateIsAnIsometryPair) {
  const auto s = gallery::hollow_square();
  const DirectedMetricSpace x(s), y(tools::relabel(s, {2, 0, 3, 1}));
  const auto r = distortion_distance(x, y);
  ASSERT_EQ(r.value, ExtReal::zero());
  const auto& maps = std::get<MapPair>(r.certificate);
  const VertexMap f(x, y, maps.forward), g(y, x, maps.backward);
  EXPECT_TRUE(is_disometry(f));
  EXPECT_TRUE(is_disometry(g));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(g(f(i)), i);
}

// --- dcorrespondence_distance -----------------------------------------------

TEST(Cdis, SelfIsZero) {
  const DirectedMetricSpace x(gallery::hollow_square());
  const auto r = dcorrespondence_distance(x, x);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, ExtReal::zero());
}

TEST(Cdis, SourceSinkHasNone) {
  for (std::size_t k : {1u, 2u, 8u}) {
    const auto s = gallery::source_sink_interval(k);
    const DirectedMetricSpace x(s), xr(reverse(s));
    const auto r = dcorrespondence_distance(x, xr);
    EXPECT_TRUE(r.exact);
    EXPECT_TRUE(r.value.is_infinite());
    EXPECT_TRUE(std::holds_alternative<std::monostate>(r.certificate));
  }
}

TEST(Cdis, TwoSegments) {
  const DirectedMetricSpace x(segment(1.0)), y(segment(3.0));
  const auto r = dcorrespondence_distance(x, y);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, ExtReal(1.0));
  EXPECT_EQ(naive_cdis(x, y), ExtReal(1.0));
}

TEST(Cdis, AgreesWithNaiveListing) {
  for (const auto& [sx, sy] : small_pairs(41, 40)) {
    const DirectedMetricSpace x(sx), y(sy);
    const auto r = dcorrespondence_distance(x, y);
    ASSERT_TRUE(r.exact);
    EXPECT_TRUE(approx_equal(r.value, naive_cdis(x, y)))
        << to_string(r.value) << " vs " << to_string(naive_cdis(x, y));
  }
}

TEST(Cdis, BeyondBudgetCertificateIsValid) {
  const auto s = gallery::hollow_square(2);
  const DirectedMetricSpace x(s), y(tools::relabel(s, {1, 0, 2, 3, 4, 5, 6, 7}));
  const auto r = dcorrespondence_distance(x, y);
  EXPECT_EQ(r.exact, r.lower_bound == r.value);
  const auto& pairs = std::get<std::vector<PointPair>>(r.certificate);
  EXPECT_TRUE(Correspondence(x.size(), y.size(), pairs).is_dcorrespondence(x.reach(), y.reach()));
  EXPECT_TRUE(approx_equal(
      evaluate_certificate(DistanceKind::kDCorrespondence, r.certificate, x, y), r.value));
  EXPECT_TRUE(approx_le(r.lower_bound, r.value));
}

// --- chain ------------------------------------------------------------------

TEST(Chain, EqualSpaces) {
  const DirectedMetricSpace x(gallery::hollow_square());
  const auto c = verify_chain(x, x);
  EXPECT_TRUE(c.conclusive);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.cdis.value, ExtReal::zero());
}

TEST(Chain, SourceSink) {
  const auto s = gallery::source_sink_interval(1);
  const DirectedMetricSpace x(s), xr(reverse(s));
  const auto c = verify_chain(x, xr);
  EXPECT_TRUE(c.conclusive);
  EXPECT_EQ(c.gh.value, ExtReal::zero());
  EXPECT_NEAR(c.dis.value.value(), 0.5, 1e-12);
  EXPECT_TRUE(c.cdis.value.is_infinite());
  EXPECT_TRUE(c.holds);
}

TEST(Chain, DirectedPartOnRandomTriples) {
  for (const auto& [sx, sy] : small_pairs(51, 30)) {
    const DirectedMetricSpace x(sx), y(sy);
    const auto c = verify_chain(x, y);
    ASSERT_TRUE(c.conclusive);
    EXPECT_TRUE(approx_le(c.gh.value, c.dis.value));
    EXPECT_TRUE(approx_le(c.dis.value, c.cdis.value));
  }
}

TEST(Chain, BaseGhCanExceedZigzagGh) {
  // An equilateral triangle whose zigzag metric is that of three points on a
  // line: the zigzag spaces are isometric while the bases are not.
  ExtendedDistanceMatrix tri(3, ExtReal(1.0));
  const FiniteDSpace x(index_labels(3), BaseMetric(tri), {{0, 1, 1.0}, {1, 2, 1.0}});
  const auto y = FiniteDSpace::from_edges(index_labels(3), {{0, 1, 1.0}, {1, 2, 1.0}});
  const DirectedMetricSpace zx(x), zy(y);
  EXPECT_TRUE(approx_equal(gh_distance(zx, zy).value, ExtReal::zero()));
  EXPECT_GT(gh_distance(x.base().materialize(), y.base().materialize()).value.value(), 0.1);
}

TEST(Certificates, ReevaluateExactly) {
  for (const auto& [sx, sy] : small_pairs(61, 15, 4)) {
    const DirectedMetricSpace x(sx), y(sy);
    const auto gh = gh_distance(x, y);
    const auto dis = distortion_distance(x, y);
    const auto cdis = dcorrespondence_distance(x, y);
    EXPECT_TRUE(approx_equal(
        evaluate_certificate(DistanceKind::kGromovHausdorff, gh.certificate, x, y), gh.value));
    EXPECT_TRUE(approx_equal(
        evaluate_certificate(DistanceKind::kDistortion, dis.certificate, x, y), dis.value));
    EXPECT_TRUE(approx_equal(
        evaluate_certificate(DistanceKind::kDCorrespondence, cdis.certificate, x, y),
        cdis.value));
  }
}
